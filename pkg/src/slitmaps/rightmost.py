"""Rightmost noncontractible simple loop and the rotations it drives.

Starting at the root and always turning counterclockwise first, a depth
first search over simple paths returns the first sequence that closes into a
noncontractible simple loop.  The first hit of a counterclockwise-ordered DFS
is exactly the greedy "first extendable dart" sequence, so no separate
extendability oracle is needed.
"""
from dataclasses import dataclass

from .errors import NoNoncontractibleLoop
from .paths import Sign, is_contractible
from .slide import rotate


@dataclass(frozen=True)
class RightmostDecomposition:
    prefix: tuple
    loop: tuple

    @property
    def origin_index(self):
        return len(self.prefix)


def _candidates(m, start):
    d = start
    while True:
        yield d
        d = m.sigma[d]
        if d == start:
            return


def rightmost_path(m):
    """Greedy rightmost ``prefix . loop`` from the root corner."""
    cache = {}

    def noncontractible(loop):
        key = frozenset(m.edge_id(d) for d in loop)
        if key not in cache:
            cache[key] = not is_contractible(m, loop)
        return cache[key]

    path = []
    visited = {m.root_vertex: 0}

    def dfs(first):
        for d in _candidates(m, first):
            h = m.head(d)
            if h in visited:
                s = visited[h]
                loop = tuple(path[s:]) + (d,)
                if len(set(map(m.edge_id, loop))) == len(loop) and noncontractible(loop):
                    return RightmostDecomposition(tuple(path[:s]), loop)
                continue
            path.append(d)
            visited[h] = len(path)
            found = dfs(m.sigma[m.iota[d]])
            if found is not None:
                return found
            path.pop()
            del visited[h]
        return None

    found = dfs(m.root)
    if found is None:
        raise NoNoncontractibleLoop("no noncontractible simple loop (genus 0?)")
    return found


def rightmost_loop(m):
    return rightmost_path(m).loop


def psi(m, sign):
    """Rotate ``m`` along its rightmost loop in direction ``sign``."""
    lam = rightmost_path(m).loop
    return rotate(m, lam, Sign(sign), check=False).map
