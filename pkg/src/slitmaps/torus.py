"""Schemes and loop systems of unicellular toroidal maps.

Pruning leaves of a unicellular genus 1 map leaves its core, a cycle
structure whose vertices of degree at least 3 form the scheme: either one
vertex with two loops (degenerate) or two vertices joined by three chains
(generic).  The rightmost loop ``lam`` runs through two scheme edges (one in
the degenerate case); the remaining scheme edge, read as a path of the map,
is ``mu``.
"""
from dataclasses import dataclass
from enum import Enum

from .errors import NotGenusOne, NotUnicellular
from .paths import Side, corner_side, reverse
from .rightmost import rightmost_path


class SchemeKind(Enum):
    GENERIC = "g"
    DEGENERATE = "d"


@dataclass(frozen=True)
class Scheme:
    kind: SchemeKind
    vertices: tuple
    edges: tuple
    core: frozenset

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return len(self.edges)


@dataclass(frozen=True)
class SchemeInfo:
    kind: SchemeKind
    lam: tuple
    mu: tuple
    alpha: tuple
    beta: tuple
    prefix: tuple
    split_index: int
    attach_index: int
    b: int
    e: int

    @property
    def parity_class(self):
        return (len(self.lam) % 2, len(self.mu + self.alpha) % 2)

    @property
    def mu_alpha(self):
        return self.mu + self.alpha

    @property
    def mu_beta(self):
        if self.beta is None:
            raise ValueError("beta is undefined for a degenerate scheme")
        return self.mu + self.beta

    @property
    def is_generic(self):
        return self.kind is SchemeKind.GENERIC

    def loop(self, name):
        """Look up ``lambda``, ``mu``, ``mu_alpha`` or ``mu_beta``."""
        return {
            "lambda": lambda: self.lam,
            "mu": lambda: self.mu,
            "mu_alpha": lambda: self.mu_alpha,
            "mu_beta": lambda: self.mu_beta,
        }[name]()

    def summary(self):
        beta = "-" if self.beta is None else str(len(self.beta))
        i, j = self.parity_class
        return (
            f"kind={self.kind.value} lambda={len(self.lam)} mu={len(self.mu)} "
            f"alpha={len(self.alpha)} beta={beta} class=({i},{j}) b={self.b} e={self.e}"
        )


def _check(u):
    if u.num_faces != 1:
        raise NotUnicellular(f"map has {u.num_faces} faces")
    if u.genus != 1:
        raise NotGenusOne(f"map has genus {u.genus}")


def core_darts(u):
    """Darts surviving iterated removal of degree 1 vertices."""
    alive = set(range(u.num_darts))
    deg = [u.degree(v) for v in range(u.num_vertices)]
    stack = [v for v in range(u.num_vertices) if deg[v] == 1]
    while stack:
        v = stack.pop()
        if deg[v] != 1:
            continue
        d = next(x for x in u.vertices[v] if x in alive)
        alive.discard(d)
        alive.discard(u.iota[d])
        deg[v] = 0
        w = u.head(d)
        deg[w] -= 1
        if deg[w] == 1:
            stack.append(w)
    return frozenset(alive)


def _core_degree(u, core, v):
    return sum(1 for d in u.vertices[v] if d in core)


def _chain(u, core, d, is_node):
    """Follow the core from dart ``d`` until a scheme vertex is reached."""
    out = [d]
    while not is_node(u.head(out[-1])):
        back = u.iota[out[-1]]
        nxt = next(x for x in u.vertices[u.head(out[-1])] if x in core and x != back)
        out.append(nxt)
    return tuple(out)


def scheme(u):
    """Scheme of a unicellular toroidal map, with each scheme edge as a path."""
    _check(u)
    core = core_darts(u)
    nodes = tuple(
        v for v in range(u.num_vertices) if _core_degree(u, core, v) >= 3
    )
    node_set = set(nodes)
    edges = []
    seen = set()
    for v in nodes:
        for d in u.vertices[v]:
            if d not in core or d in seen:
                continue
            path = _chain(u, core, d, node_set.__contains__)
            seen.update(path)
            seen.update(u.iota[x] for x in path)
            edges.append(path)
    kind = SchemeKind.DEGENERATE if len(nodes) == 1 else SchemeKind.GENERIC
    if (len(nodes), len(edges)) not in ((1, 2), (2, 3)):
        raise AssertionError(f"unexpected scheme shape {len(nodes)} vertices, {len(edges)} edges")
    return Scheme(kind, nodes, tuple(edges), core)


def classify(u):
    """Loop system, parity class and root attachment parameters of ``u``."""
    sch = scheme(u)
    core = sch.core
    rm = rightmost_path(u)
    lam = rm.loop
    origin = u.tail(lam[0])
    if origin not in sch.vertices:
        raise AssertionError("rightmost loop does not start at a scheme vertex")
    lam_edges = {u.edge_id(d) for d in lam}
    rest = [p for p in sch.edges if u.edge_id(p[0]) not in lam_edges]
    if len(rest) != 1:
        raise AssertionError("rightmost loop is not a union of scheme edges")
    mu = rest[0]

    tree_len = 0
    while tree_len < len(rm.prefix) and rm.prefix[tree_len] not in core:
        tree_len += 1
    tree_part = rm.prefix[:tree_len]
    core_part = rm.prefix[tree_len:]
    if any(d not in core for d in core_part):
        raise AssertionError("prefix leaves the core after reaching it")

    if sch.kind is SchemeKind.GENERIC:
        if u.tail(mu[0]) != origin:
            mu = reverse(u, mu)
    else:
        if core_part:
            first = u.iota[core_part[-1]]
        else:
            # the core dart just clockwise of lam_1
            first = u.sigma_inv[lam[0]]
            while first not in core:
                first = u.sigma_inv[first]
        mu = mu if mu[0] == first else reverse(u, mu)
        if mu[0] != first:
            raise AssertionError("degenerate mu does not start at the expected dart")
    q = len(mu)

    if core_part:
        if reverse(u, core_part) != mu[: len(core_part)]:
            raise AssertionError("prefix does not run back along mu")
    j = len(core_part) + 1

    if sch.kind is SchemeKind.GENERIC:
        end = u.head(mu[-1])
        i = next(t for t, d in enumerate(lam) if u.tail(d) == end) + 1
        alpha = lam[i - 1:]
        beta = reverse(u, lam[: i - 1])
    else:
        i = 1
        alpha = ()
        beta = None

    _check_attachment(u, mu, j, tree_part, sch.kind)
    return SchemeInfo(
        kind=sch.kind,
        lam=lam,
        mu=mu,
        alpha=alpha,
        beta=beta,
        prefix=rm.prefix,
        split_index=i,
        attach_index=j,
        b=int(j == 1),
        e=int(j == q),
    )


def _check_attachment(u, mu, j, tree_part, kind):
    """The root must hang on the left of ``mu`` at an interior vertex."""
    if j == 1 and kind is SchemeKind.GENERIC:
        return
    fwd = mu[j - 1]
    back = u.iota[mu[j - 2]]
    if tree_part:
        arrive = u.iota[tree_part[-1]]
        lefts = _left_arc(u, mu, j)
        ok = arrive in lefts
    else:
        ok = corner_side(u, fwd, back, u.root) is Side.LEFT
    if not ok:
        raise AssertionError("root attaches on the right of mu")


def _left_arc(u, mu, j):
    fwd = mu[j - 1]
    back = u.iota[mu[j - 2]]
    out = []
    d = u.sigma[fwd]
    while d != back:
        out.append(d)
        d = u.sigma[d]
    return out
