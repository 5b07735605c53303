"""Rooted combinatorial maps as permutation pairs on darts.

A map is a pair ``(sigma, iota)`` of permutations of the darts
``0 .. 2E-1``: ``sigma[d]`` is the next dart counterclockwise around the
tail of ``d`` and ``iota`` pairs each dart with its reverse.  Faces are the
cycles of ``sigma o iota``; walking a face this way keeps the face on the
right of every dart.

The root corner sits at the tail of ``root``, just clockwise of it, so the
counterclockwise scan of the root vertex starts with ``root`` itself.
"""
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
import math

import numpy as np

from . import _kernels
from .errors import (
    Disconnected,
    IotaHasFixedPoint,
    LabelCountMismatch,
    MapError,
    NotPermutation,
)

WHITE = 0
BLACK = 1


@dataclass(frozen=True)
class CombinatorialMap:
    sigma: tuple
    iota: tuple
    root: int
    face_labels: tuple = None
    _validated: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if not self._validated:
            _validate(self)
            object.__setattr__(self, "_validated", True)

    # -- sizes -----------------------------------------------------------
    @property
    def num_darts(self):
        return len(self.sigma)

    @property
    def num_edges(self):
        return len(self.sigma) // 2

    @cached_property
    def _vertex_data(self):
        ids, count = _kernels.cycle_ids(np.asarray(self.sigma, dtype=np.int64))
        return ids, int(count)

    @cached_property
    def _face_data(self):
        phi = _kernels.face_perm(
            np.asarray(self.sigma, dtype=np.int64), np.asarray(self.iota, dtype=np.int64)
        )
        ids, count = _kernels.cycle_ids(phi)
        return ids, int(count), tuple(int(x) for x in phi)

    @property
    def num_vertices(self):
        return self._vertex_data[1]

    @property
    def num_faces(self):
        return self._face_data[1]

    @cached_property
    def genus(self):
        chi = self.num_vertices - self.num_edges + self.num_faces
        return (2 - chi) // 2

    # -- incidence ---------------------------------------------------------
    @cached_property
    def vertex_of(self):
        """Vertex index of the tail of each dart (vertices ordered by min dart)."""
        return tuple(int(x) for x in self._vertex_data[0])

    @cached_property
    def face_of(self):
        return tuple(int(x) for x in self._face_data[0])

    @property
    def phi(self):
        """Face permutation ``sigma o iota``."""
        return self._face_data[2]

    def tail(self, d):
        return self.vertex_of[d]

    def head(self, d):
        return self.vertex_of[self.iota[d]]

    @property
    def root_vertex(self):
        return self.vertex_of[self.root]

    @cached_property
    def vertices(self):
        """Vertex rotations: tuple of dart cycles, each starting at its min dart."""
        return _orbits(self.sigma, self.vertex_of, self.num_vertices)

    @cached_property
    def faces(self):
        """Face dart cycles (orbits of ``sigma o iota``), ordered by min dart."""
        return _orbits(self.phi, self.face_of, self.num_faces)

    def degree(self, v):
        return len(self.vertices[v])

    def face_degrees(self):
        return tuple(len(f) for f in self.faces)

    @cached_property
    def dart_face_labels(self):
        """Per-dart face label, or None when the map carries no labels."""
        if self.face_labels is None:
            return None
        return tuple(self.face_labels[f] for f in self.face_of)

    @cached_property
    def sigma_inv(self):
        inv = [0] * len(self.sigma)
        for d, s in enumerate(self.sigma):
            inv[s] = d
        return tuple(inv)

    def edge_id(self, d):
        """An edge is named by its smaller dart."""
        return min(d, self.iota[d])

    def edges(self):
        return tuple(d for d in range(self.num_darts) if d < self.iota[d])

    def map_type(self):
        """Face degrees in label order (``None`` if unlabeled)."""
        if self.face_labels is None:
            return None
        r = self.num_faces
        degs = [0] * r
        for f, lab in enumerate(self.face_labels):
            degs[lab - 1] = len(self.faces[f])
        return tuple(degs)

    # -- convenience -----------------------------------------------------
    def key(self):
        """Hashable identity of the rooted map up to isomorphism."""
        c = canonical_form(self)
        return (c.sigma, c.face_labels)

    def with_root(self, root):
        return CombinatorialMap(self.sigma, self.iota, root, self.face_labels, _validated=True)

    def without_labels(self):
        return CombinatorialMap(self.sigma, self.iota, self.root, None, _validated=True)


def _orbits(perm, ids, count):
    out = [None] * count
    for start in range(len(perm)):
        f = ids[start]
        if out[f] is not None:
            continue
        cyc = [start]
        d = perm[start]
        while d != start:
            cyc.append(d)
            d = perm[d]
        out[f] = tuple(cyc)
    return tuple(out)


def _validate(m):
    sigma, iota = m.sigma, m.iota
    n = len(sigma)
    if len(iota) != n:
        raise MapError("sigma and iota have different lengths")
    if n == 0:
        raise MapError("a map needs at least one edge")
    if n % 2:
        raise MapError("odd number of darts")
    if sorted(sigma) != list(range(n)):
        raise NotPermutation("sigma is not a permutation of 0..%d" % (n - 1))
    if sorted(iota) != list(range(n)):
        raise NotPermutation("iota is not a permutation of 0..%d" % (n - 1))
    for d in range(n):
        if iota[d] == d:
            raise IotaHasFixedPoint(f"iota fixes dart {d}")
        if iota[iota[d]] != d:
            raise NotPermutation(f"iota is not an involution at dart {d}")
    if not 0 <= m.root < n:
        raise MapError(f"root {m.root} out of range")
    lab = _kernels.canonical_labeling(
        np.asarray(sigma, dtype=np.int64), np.asarray(iota, dtype=np.int64), m.root
    )
    if (lab < 0).any():
        raise Disconnected("sigma and iota do not act transitively")
    if m.face_labels is not None:
        if len(m.face_labels) != m.num_faces:
            raise LabelCountMismatch(
                f"{len(m.face_labels)} face labels for {m.num_faces} faces"
            )


def build_map(sigma, iota, root=0, face_labels=None):
    """Validate and build a map.

    >>> m = build_map([2, 3, 1, 0], [1, 0, 3, 2], 0)
    >>> (m.num_vertices, m.num_edges, m.num_faces, m.genus)
    (1, 2, 1, 1)
    """
    return CombinatorialMap(
        tuple(int(x) for x in sigma),
        tuple(int(x) for x in iota),
        int(root),
        None if face_labels is None else tuple(face_labels),
    )


def from_cycles(cycles, iota, root=0, face_labels=None):
    """Build a map from vertex rotations given as dart cycles."""
    n = len(iota)
    sigma = [None] * n
    for cyc in cycles:
        for i, d in enumerate(cyc):
            sigma[d] = cyc[(i + 1) % len(cyc)]
    if any(s is None for s in sigma):
        raise NotPermutation("vertex cycles do not cover every dart")
    return build_map(sigma, iota, root, face_labels)


def faces(m):
    return m.faces


def genus(m):
    return m.genus


def relabel(m, lab, root=None):
    """Apply the dart relabeling ``d -> lab[d]``."""
    n = m.num_darts
    sigma = [0] * n
    iota = [0] * n
    dl = [None] * n
    src_labels = m.dart_face_labels
    for d in range(n):
        nd = lab[d]
        sigma[nd] = lab[m.sigma[d]]
        iota[nd] = lab[m.iota[d]]
        if src_labels is not None:
            dl[nd] = src_labels[d]
    new_root = lab[m.root] if root is None else root
    face_labels = None
    out = CombinatorialMap(tuple(sigma), tuple(iota), new_root, None)
    if src_labels is not None:
        face_labels = tuple(dl[f[0]] for f in out.faces)
        out = CombinatorialMap(out.sigma, out.iota, out.root, face_labels, _validated=True)
    return out


def canonical_labeling(m):
    lab = _kernels.canonical_labeling(
        np.asarray(m.sigma, dtype=np.int64), np.asarray(m.iota, dtype=np.int64), m.root
    )
    return [int(x) for x in lab]


def canonical_form(m):
    """Relabel darts by breadth-first discovery from the root.

    Darts are discovered through ``sigma`` and every dart's reverse gets the
    next label, so canonical maps have ``iota = (0 1)(2 3)...`` and root 0.
    """
    return relabel(m, canonical_labeling(m))


def same_map(a, b):
    return a.key() == b.key()


def bipartite_coloring(m):
    """Proper white/black vertex colouring with white root vertex, or None."""
    dist = vertex_distances(m, m.root_vertex)
    colors = tuple(x % 2 for x in dist)
    for d in range(m.num_darts):
        if colors[m.tail(d)] == colors[m.head(d)]:
            return None
    return colors


def is_bipartite(m):
    return bipartite_coloring(m) is not None


def neighbours(m):
    adj = [[] for _ in range(m.num_vertices)]
    for d in range(m.num_darts):
        adj[m.tail(d)].append(m.head(d))
    return adj


def vertex_distances(m, source):
    adj = neighbours(m)
    dist = [-1] * m.num_vertices
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def graph_distance(m, u, v):
    return vertex_distances(m, u)[v]


@dataclass(frozen=True)
class MapType:
    degrees: tuple

    def __post_init__(self):
        if not self.degrees:
            raise ValueError("empty type")
        for a in self.degrees:
            if a < 2 or a % 2:
                raise ValueError(f"type entries must be even and >= 2, got {a}")

    @property
    def num_edges(self):
        return sum(self.degrees) // 2

    @property
    def num_faces(self):
        return len(self.degrees)

    def covering_edges(self, g=1):
        """Edge count of a covering map for this type (Euler formula)."""
        return self.num_edges - self.num_faces + 1


def face_labelings(m, degrees):
    """All face-label tuples giving ``m`` the type ``degrees``."""
    degrees = tuple(degrees)
    fdeg = m.face_degrees()
    if sorted(fdeg) != sorted(degrees):
        return []
    out = []
    r = len(fdeg)
    used = [False] * r
    labels = [0] * r

    def rec(f):
        if f == r:
            out.append(tuple(labels))
            return
        for j in range(r):
            if not used[j] and degrees[j] == fdeg[f]:
                used[j] = True
                labels[f] = j + 1
                rec(f + 1)
                used[j] = False

    rec(0)
    return out


def double_factorial(n):
    return math.prod(range(n, 0, -2)) if n > 0 else 1


def restrict(m, darts):
    """Submap on an iota-closed dart set, with inherited rotation.

    Returns ``(sub, to_ambient)``: darts of ``sub`` are renumbered
    ``0..len(darts)-1`` in increasing ambient order.  The root of ``sub`` is
    the first kept dart counterclockwise from the ambient root (inclusive),
    so the root corner of ``sub`` contains that of ``m``.
    """
    keep = sorted(set(darts))
    pos = {d: i for i, d in enumerate(keep)}
    sigma = [0] * len(keep)
    for d in keep:
        s = m.sigma[d]
        while s not in pos:
            s = m.sigma[s]
        sigma[pos[d]] = pos[s]
    iota = [pos[m.iota[d]] for d in keep]
    r = m.root
    while r not in pos:
        r = m.sigma[r]
        if r == m.root:
            raise MapError("submap misses the root vertex")
    return build_map(sigma, iota, pos[r]), tuple(keep)
