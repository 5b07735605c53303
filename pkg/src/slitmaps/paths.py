"""Paths and loops on a map.

Paths are plain tuples of darts.  A loop ``(g_1, ..., g_k)`` has its
vertices at the tails of its darts; at the vertex of ``g_i`` the *forward*
dart is ``g_i`` and the *back* dart is ``iota(g_{i-1})``.  Darts strictly
counterclockwise between forward and back lie on the left of the loop, darts
strictly counterclockwise between back and forward on its right.
"""
from enum import Enum, IntEnum

from .errors import ChainMismatch, NotALoop, NotOnLoop


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


class Sign(IntEnum):
    PLUS = 1
    MINUS = -1

    def flip(self):
        return Sign(-self.value)

    def __str__(self):
        return "+" if self is Sign.PLUS else "-"

    @classmethod
    def parse(cls, text):
        if text in ("+", "plus", "1", "+1"):
            return cls.PLUS
        if text in ("-", "minus", "-1"):
            return cls.MINUS
        raise ValueError(f"not a sign: {text!r}")


def is_path(m, p):
    return all(m.head(p[i]) == m.tail(p[i + 1]) for i in range(len(p) - 1))


def check_path(m, p):
    for i in range(len(p) - 1):
        if m.head(p[i]) != m.tail(p[i + 1]):
            raise ChainMismatch(f"dart {p[i + 1]} does not start where dart {p[i]} ends")
    return tuple(p)


def concat(m, p, q):
    """``p . q``; either may be empty."""
    if p and q and m.head(p[-1]) != m.tail(q[0]):
        raise ChainMismatch(f"path ends at vertex {m.head(p[-1])}, next starts at {m.tail(q[0])}")
    return tuple(p) + tuple(q)


def reverse(m, p):
    return tuple(m.iota[d] for d in reversed(p))


def is_loop(m, p):
    return len(p) > 0 and is_path(m, p) and m.head(p[-1]) == m.tail(p[0])


def loop_vertices(m, loop):
    return [m.tail(d) for d in loop]


def is_simple_path(m, p):
    if not p:
        return True
    verts = [m.tail(d) for d in p] + [m.head(p[-1])]
    return len(set(verts)) == len(verts)


def is_simple_loop(m, p):
    """All visited vertices distinct except the origin, visited twice."""
    if not is_loop(m, p):
        raise NotALoop(f"{tuple(p)} is not a loop")
    verts = loop_vertices(m, p)
    return len(set(verts)) == len(verts)


def uses_edge_twice(m, p):
    edges = [m.edge_id(d) for d in p]
    return len(set(edges)) != len(edges)


def loop_arcs(m, loop):
    """Left and right arcs (lists of darts, counterclockwise) at every loop vertex."""
    k = len(loop)
    lefts, rights = [], []
    for i in range(k):
        fwd = loop[i]
        back = m.iota[loop[i - 1]]
        left = []
        d = m.sigma[fwd]
        while d != back:
            left.append(d)
            d = m.sigma[d]
        right = []
        d = m.sigma[back]
        while d != fwd:
            right.append(d)
            d = m.sigma[d]
        lefts.append(left)
        rights.append(right)
    return lefts, rights


def dart_sides(m, loop):
    """Map each non-loop dart at a loop vertex to ``(loop index, Side)``."""
    lefts, rights = loop_arcs(m, loop)
    out = {}
    for i, (left, right) in enumerate(zip(lefts, rights)):
        for d in left:
            out[d] = (i, Side.LEFT)
        for d in right:
            out[d] = (i, Side.RIGHT)
    return out


def side_of_arrival(m, loop, incoming):
    """Side of the loop from which ``incoming`` reaches it."""
    sides = dart_sides(m, loop)
    partner = m.iota[incoming]
    if partner not in sides:
        raise NotOnLoop(f"dart {incoming} does not arrive at the loop off the loop")
    return sides[partner][1]


def side_of_departure(m, loop, outgoing):
    sides = dart_sides(m, loop)
    if outgoing not in sides:
        raise NotOnLoop(f"dart {outgoing} does not leave the loop off the loop")
    return sides[outgoing][1]


def corner_side(m, fwd, back, dart):
    """Side of the corner just clockwise of ``dart`` at a loop vertex."""
    if dart == back:
        return Side.LEFT
    if dart == fwd:
        return Side.RIGHT
    d = m.sigma[fwd]
    while d != back:
        if d == dart:
            return Side.LEFT
        d = m.sigma[d]
    return Side.RIGHT


def is_contractible(m, loop):
    """Whether a simple loop bounds a disk.

    Slits along the loop: the loop is contractible iff the slit surface falls
    apart and one piece (its boundary hole capped) is a sphere.  A loop going
    back and forth along a single edge is contractible.
    """
    from .slide import slit_pieces

    if not is_simple_loop(m, loop):
        raise NotALoop("contractibility is only decided for simple loops")
    if uses_edge_twice(m, loop):
        return True
    pieces = slit_pieces(m, loop)
    return len(pieces) == 2 and min(g for g, _ in pieces) == 0


def simple_loops(m):
    """Every simple loop of ``m``, as dart tuples (each origin and direction)."""
    out = []
    for start in range(m.num_darts):
        origin = m.tail(start)
        stack = [(start, [start], {origin})]
        while stack:
            d, path, seen = stack.pop()
            h = m.head(d)
            if h == origin:
                out.append(tuple(path))
                continue
            if h in seen:
                continue
            for e in m.vertices[h]:
                stack.append((e, path + [e], seen | {h}))
    return sorted(set(out))


def noncontractible_simple_loops(m):
    return [g for g in simple_loops(m) if not is_contractible(m, g)]
