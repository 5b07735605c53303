"""The seven bijections on unicellular toroidal maps with an odd rightmost loop.

Cases a to f are one or two rotations along loops of the current map's loop
system; case g cuts the two odd loops of a degenerate scheme open into a plane
tree with two marked vertices (``xi``) and ``theta`` sews them back.

Every function here also works on a covered map: pass the ambient map plus
the set of darts of the covering submap, and loops are read off the covering
while rotations and re-pairings act on the ambient map.  Dart ids of the
covering never change, so the cover set travels unchanged.
"""
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .core import CombinatorialMap, restrict
from .errors import (
    CodomainViolation,
    MapError,
    MarksNotOdd,
    NotATree,
    NotInCodomain,
    NotInDomain,
    PreconditionViolated,
)
from .paths import Sign
from .slide import rotate
from .torus import SchemeKind, classify


class CaseTag(Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    E = "e"
    F = "f"
    G = "g"

    def __str__(self):
        return self.value


PLUS, MINUS = Sign.PLUS, Sign.MINUS

FORWARD = {
    CaseTag.A: (("mu_alpha", PLUS),),
    CaseTag.B: (("mu", PLUS),),
    CaseTag.C: (("mu", PLUS),),
    CaseTag.D: (("mu_beta", PLUS),),
    CaseTag.E: (("mu_beta", PLUS),),
    CaseTag.F: (("mu", MINUS), ("lambda", MINUS)),
}

INVERSE = {
    CaseTag.A: (("mu_alpha", MINUS),),
    CaseTag.B: (("mu_alpha", MINUS),),
    CaseTag.C: (("mu_beta", MINUS),),
    CaseTag.D: (("mu_beta", MINUS),),
    CaseTag.E: (("mu_alpha", MINUS),),
    CaseTag.F: (("lambda", PLUS), ("mu_alpha", PLUS)),
}

BLUE = (CaseTag.A, CaseTag.B, CaseTag.E)
RED = (CaseTag.C, CaseTag.D, CaseTag.F)


@dataclass(frozen=True)
class MarkedTree:
    """A plane map with two marked vertices; ``cover`` set for covered trees."""

    tree: CombinatorialMap
    marks: frozenset
    cover: frozenset = None

    def key(self):
        from .core import canonical_labeling

        lab = canonical_labeling(self.tree)
        marks = frozenset(min(lab[d] for d in self.tree.vertices[v]) for v in self.marks)
        cover = None
        if self.cover is not None:
            cover = frozenset(lab[d] for d in self.cover)
        return (self.tree.key(), marks, cover)


def _info(m, cover):
    """Classification of the covering, with loops in ambient dart ids."""
    if cover is None:
        return classify(m), None
    u, amb = restrict(m, cover)
    return classify(u), (u, amb)


def _ambient_loop(si, name, sub):
    loop = si.loop(name)
    return loop if sub is None else tuple(sub[1][d] for d in loop)


def case_of(u, cover=None):
    si, _ = _info(u, cover)
    return _case(si)


def _case(si):
    cls = si.parity_class
    generic = si.kind is SchemeKind.GENERIC
    if cls == (1, 0):
        if generic:
            return CaseTag.A
        return CaseTag.B if si.b else CaseTag.C
    if cls == (1, 1):
        if generic:
            return CaseTag.E if si.b else CaseTag.D
        return CaseTag.G if si.e else CaseTag.F
    raise NotInDomain(f"class {cls} is handled by the rightmost rotation, not by the case suite")


def in_codomain(tag, x, cover=None):
    """Whether ``x`` lies in the image of case ``tag``."""
    if tag is CaseTag.G:
        return isinstance(x, MarkedTree) and _valid_marked(x)
    if isinstance(x, MarkedTree):
        return False
    try:
        si, _ = _info(x, cover)
    except MapError:
        return False
    if si.parity_class != (0, 0):
        return False
    generic = si.kind is SchemeKind.GENERIC
    return {
        CaseTag.A: lambda: si.e == 0,
        CaseTag.B: lambda: si.e == 1 and len(si.mu) == 1,
        CaseTag.C: lambda: generic and len(si.beta) == 1,
        CaseTag.D: lambda: generic and len(si.beta) >= 2,
        CaseTag.E: lambda: si.e == 1 and len(si.mu) >= 2,
        CaseTag.F: lambda: not generic,
    }[tag]()


def _run(m, steps, cover):
    for name, sign in steps:
        si, sub = _info(m, cover)
        m = rotate(m, _ambient_loop(si, name, sub), sign, check=False).map
    return m


def apply_case(u, cover=None, check=True):
    """Forward bijection of the case ``u`` belongs to."""
    tag = case_of(u, cover)
    if tag is CaseTag.G:
        out = xi(u, cover)
    else:
        out = _run(u, FORWARD[tag], cover)
    if check and not in_codomain(tag, out, cover):
        raise CodomainViolation(f"case {tag} image left its codomain")
    return tag, out


def invert_case(x, tag, cover=None, check=True):
    tag = CaseTag(str(tag))
    if check and not in_codomain(tag, x, cover):
        raise NotInCodomain(f"input is not in the codomain of case {tag}")
    if tag is CaseTag.G:
        return theta(x)
    return _run(x, INVERSE[tag], cover)


# -- re-pairing --------------------------------------------------------------

def repair(m, cover, pairs, dart_labels=None):
    """Re-pair the cover darts of ``m`` keeping the face walk of the cover.

    ``pairs`` maps cover darts to their new partners.  The covering's face
    permutation is unchanged; ambient darts sitting in a corner of the
    covering stay in that corner, in the same order.
    """
    cover = set(cover)
    iota = list(m.iota)
    for d, e in pairs.items():
        iota[d] = e
        iota[e] = d
    sigma = list(m.sigma)
    for x in cover:
        s = m.sigma[m.iota[x]]
        extras = []
        while s not in cover:
            extras.append(s)
            s = m.sigma[s]
        if extras:
            sigma[iota[x]] = extras[0]
            sigma[extras[-1]] = s
        else:
            sigma[iota[x]] = s
    out = CombinatorialMap(tuple(sigma), tuple(iota), m.root)
    labels = m.dart_face_labels if dart_labels is None else dart_labels
    if labels is not None:
        out = _with_labels(out, labels)
    return out


def _with_labels(m, dart_labels):
    labels = []
    for f in m.faces:
        vals = {dart_labels[d] for d in f}
        if len(vals) != 1:
            raise MapError("re-pairing merged faces with different labels")
        labels.append(vals.pop())
    return CombinatorialMap(m.sigma, m.iota, m.root, tuple(labels), _validated=True)


def _face_order(u, start, keep):
    face = u.faces[u.face_of[start]]
    i = face.index(start)
    seq = face[i:] + face[:i]
    return [d for d in seq if d in keep]


# -- case g ------------------------------------------------------------------

def xi(u, cover=None):
    """Cut the two odd loops of a degenerate scheme into a marked plane tree."""
    si, sub = _info(u, cover)
    if not (si.kind is SchemeKind.DEGENERATE and si.parity_class == (1, 1) and si.e == 1):
        raise PreconditionViolated("xi needs a degenerate map of class (1,1) with e=1")
    um = u if sub is None else sub[0]
    amb = (lambda d: d) if sub is None else sub[1].__getitem__
    lam, mu = si.lam, si.mu
    k, q = len(lam), len(mu)
    n = k + q
    iota = um.iota
    expect = (
        list(lam)
        + list(mu)
        + [iota[d] for d in reversed(lam)]
        + [iota[d] for d in reversed(mu)]
    )
    order = _face_order(um, lam[0], set(expect))
    if order != expect:
        raise AssertionError("core darts are not in the expected face order")
    c = [amb(d) for d in order]
    core = set(si.lam) | set(si.mu)
    w_len = sum(1 for d in si.prefix if d not in core)
    if w_len % 2:
        pairs = {c[j]: c[2 * n - 1 - j] for j in range(2 * n)}
        ends = (c[0], c[n])
    else:
        pairs = {c[j]: c[(1 - j) % (2 * n)] for j in range(2 * n)}
        ends = (c[1], c[n + 1])
    cover_set = frozenset(range(u.num_darts)) if cover is None else frozenset(cover)
    t = repair(u, cover_set, pairs)
    marks = frozenset(t.tail(d) for d in ends)
    return MarkedTree(t, marks, None if cover is None else frozenset(cover))


def _tree_of(t):
    if t.cover is None:
        return t.tree, None
    return restrict(t.tree, t.cover)


def _valid_marked(t):
    try:
        _marked_data(t)
    except MapError:
        return False
    return True


def _marked_data(t):
    """Covering tree, its vertex ids of the marks, and root distances."""
    m = t.tree
    u, sub = _tree_of(t)
    if u.num_faces != 1 or u.genus != 0:
        raise NotATree("covering is not a plane tree")
    if len(t.marks) != 2:
        raise MarksNotOdd("need two distinct marked vertices")
    if sub is None:
        uv = {v: v for v in range(m.num_vertices)}
    else:
        uv = {m.tail(d): u.tail(i) for i, d in enumerate(sub)}
    marks = [uv[v] for v in sorted(t.marks)]
    dist, parent = _bfs(u, u.root_vertex)
    if any(dist[v] % 2 == 0 for v in marks):
        raise MarksNotOdd("marked vertices must be at odd distance from the root")
    return u, sub, marks, dist, parent


def _bfs(u, source):
    dist = [-1] * u.num_vertices
    parent = [None] * u.num_vertices
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for d in u.vertices[v]:
            w = u.head(d)
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                parent[w] = d
                queue.append(w)
    return dist, parent


def _tree_path(u, a, b):
    _, parent = _bfs(u, a)
    out = []
    v = b
    while v != a:
        d = parent[v]
        out.append(d)
        v = u.tail(d)
    return tuple(reversed(out))


def theta(t):
    """Inverse of ``xi``: sew the chain between the marks into two odd loops."""
    u, sub, (a, b), dist, _ = _marked_data(t)
    amb = (lambda d: d) if sub is None else sub.__getitem__
    chain = _tree_path(u, a, b)
    n = len(chain)
    on_chain = {u.tail(d) for d in chain} | {b}
    w_len = min(dist[v] for v in on_chain)

    def order_and_gap(chain):
        keep = set(chain) | {u.iota[d] for d in chain}
        order = _face_order(u, chain[0], keep)
        expect = list(chain) + [u.iota[d] for d in reversed(chain)]
        if order != expect:
            raise AssertionError("chain darts are not in the expected face order")
        pos = {d: i for i, d in enumerate(order)}
        x = _phi_inv(u, u.root)
        while x not in pos:
            x = _phi_inv(u, x)
        return order, pos[x]

    d_order, g = order_and_gap(chain)
    if g < n:
        chain = tuple(u.iota[d] for d in reversed(chain))
        d_order, g = order_and_gap(chain)
    if w_len % 2:
        c = d_order
        k = g - n
    else:
        c = [d_order[(j - 1) % (2 * n)] for j in range(2 * n)]
        k = g - n + 1
    qlen = n - k
    if not (1 <= k and 1 <= qlen):
        raise AssertionError(f"root gap gives loop lengths {k} and {qlen}")
    pairs = {}
    for i in range(1, k + 1):
        pairs[amb(c[i - 1])] = amb(c[n + k - i])
    for j in range(1, qlen + 1):
        pairs[amb(c[k + j - 1])] = amb(c[2 * n - j])
    cover = frozenset(range(t.tree.num_darts)) if t.cover is None else t.cover
    return repair(t.tree, cover, pairs)


def _phi_inv(u, d):
    # phi = sigma o iota, so phi^-1 = iota o sigma^-1
    return u.iota[u.sigma_inv[d]]
