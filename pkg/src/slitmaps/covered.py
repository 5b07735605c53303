"""Covered maps: an ambient map with a spanning unicellular submap.

The covering is stored as the set of its ambient darts.  Rotations along a
loop of the covering never renumber darts, so the same set describes the
covering after the move; the case suite of :mod:`slitmaps.bijections` runs
unchanged with the cover passed alongside.
"""
from dataclasses import dataclass
from itertools import combinations

from .bijections import CaseTag, MarkedTree, apply_case, case_of, invert_case
from .core import CombinatorialMap, canonical_labeling, is_bipartite, restrict
from .errors import LoopNotInCovering, MapError
from .paths import Sign
from .rightmost import rightmost_path
from .slide import rotate


@dataclass(frozen=True)
class CoveredMap:
    ambient: CombinatorialMap
    cover: frozenset

    @property
    def covering_edges(self):
        return tuple(sorted(d for d in self.cover if d < self.ambient.iota[d]))

    @property
    def covering(self):
        return restrict(self.ambient, self.cover)[0]

    def submap(self):
        return restrict(self.ambient, self.cover)

    def key(self):
        lab = canonical_labeling(self.ambient)
        return (self.ambient.key(), frozenset(lab[d] for d in self.cover))


def from_edges(m, edges):
    darts = set(edges) | {m.iota[e] for e in edges}
    return CoveredMap(m, frozenset(darts))


def is_covering(m, darts):
    """Spanning, connected, unicellular and of the ambient genus."""
    if not darts:
        return m.num_vertices == 1 and m.genus == 0
    if len({m.tail(d) for d in darts}) != m.num_vertices:
        return False
    try:
        u, _ = restrict(m, darts)
    except MapError:
        return False
    return u.num_faces == 1 and u.genus == m.genus


def spanning_unicellular_submaps(m):
    """All coverings of ``m``, in lexicographic order of their edge lists."""
    size = m.num_vertices - 1 + 2 * m.genus
    out = []
    for edges in combinations(m.edges(), size):
        darts = frozenset(edges) | frozenset(m.iota[e] for e in edges)
        if is_covering(m, darts):
            out.append(CoveredMap(m, darts))
    return out


def rotate_covered(cm, loop, sign, check=True):
    """Rotate the ambient map along a loop of the covering."""
    loop = tuple(loop)
    if any(d not in cm.cover for d in loop):
        raise LoopNotInCovering("every loop dart must belong to the covering")
    res = rotate(cm.ambient, loop, Sign(sign), check=check)
    return CoveredMap(res.map, cm.cover), res.loop, res.sign


def bipartite_equivalence(cm):
    """(ambient bipartite, covering bipartite)."""
    if not cm.cover:
        return is_bipartite(cm.ambient), True
    return is_bipartite(cm.ambient), is_bipartite(cm.covering)


def covered_psi(cm, sign):
    """Rotate along the rightmost loop of the covering."""
    u, amb = cm.submap()
    lam = tuple(amb[d] for d in rightmost_path(u).loop)
    return rotate_covered(cm, lam, sign, check=False)[0]


def covered_case(cm):
    """``"bip"``, ``"psi"`` or the case tag of the covering."""
    from .torus import classify

    cls = classify(cm.covering).parity_class
    if cls == (0, 0):
        return "bip"
    if cls == (0, 1):
        return "psi"
    return case_of(cm.ambient, cm.cover)


def covered_suite(cm, check=True):
    """Send a covered toroidal map to a bipartite one or a marked plane one.

    Returns ``(tag, image)``: ``bip`` is the identity on bipartite covered
    maps, ``psi`` the rightmost rotation from class (0,1) into class (0,0),
    and the case tags a to g act as on unicellular maps.
    """
    tag = covered_case(cm)
    if tag == "bip":
        return tag, cm
    if tag == "psi":
        return tag, covered_psi(cm, Sign.PLUS)
    tag, out = apply_case(cm.ambient, cm.cover, check=check)
    if isinstance(out, MarkedTree):
        return tag, out
    return tag, CoveredMap(out, cm.cover)


def covered_inverse(tag, x, check=True):
    if tag == "bip":
        return x
    if tag == "psi":
        return covered_psi(x, Sign.MINUS)
    tag = CaseTag(str(tag))
    if tag is CaseTag.G:
        return CoveredMap(invert_case(x, tag, check=check), x.cover)
    return CoveredMap(invert_case(x.ambient, tag, x.cover, check=check), x.cover)
