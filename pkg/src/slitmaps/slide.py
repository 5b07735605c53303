"""Slit a map along a simple loop, slide one notch, sew back.

Slitting loop ``(g_1..g_k)`` doubles every loop vertex and edge.  The left
copy keeps the loop's dart ids (``g_i`` forward, ``iota(g_i)`` back); the
right copy gets fresh ids ``N + 2i`` (forward) and ``N + 2i + 1`` (back),
``N`` the original dart count.  The two holes become faces: the left
boundary face reads ``(g_1, ..., g_k)`` and the right one reads the back
darts of the right copy in decreasing order.

Sewing with offset ``o`` glues right copy edge ``i`` onto left copy edge
``i + o``; offset 0 undoes the slit, offsets +1 and -1 are the two rotations.
The glued edge ``i`` reuses the ids of ``g_i`` so non-loop darts never move.
"""
from dataclasses import dataclass

from . import _kernels
from .core import CombinatorialMap
from .errors import LoopContractible, LoopNotSimple, MapError, NotALoop
from .paths import Side, Sign, dart_sides, is_contractible, is_simple_loop, loop_arcs, uses_edge_twice
from .errors import DecompositionInvalid

import numpy as np


@dataclass(frozen=True)
class SlitComplex:
    sigma: tuple
    iota: tuple
    root: int
    loop: tuple
    left_copy: tuple
    right_copy: tuple
    sides: dict
    dart_labels: tuple
    num_original: int

    @property
    def k(self):
        return len(self.loop)

    @property
    def left_back(self):
        return tuple(self.iota[d] for d in self.left_copy)

    @property
    def right_back(self):
        return tuple(self.iota[d] for d in self.right_copy)

    def boundary_faces(self):
        k = self.k
        left = tuple(self.left_copy)
        right = tuple(self.right_back[i] for i in range(k - 1, -1, -1))
        return left, right

    @property
    def num_edges(self):
        return len(self.sigma) // 2

    def components(self):
        """Per connected piece: (genus, vertices, edges, faces), holes capped as faces."""
        sigma = np.asarray(self.sigma, dtype=np.int64)
        iota = np.asarray(self.iota, dtype=np.int64)
        n = len(self.sigma)
        comp = [-1] * n
        ncomp = 0
        for s in range(n):
            if comp[s] >= 0:
                continue
            stack = [s]
            comp[s] = ncomp
            while stack:
                d = stack.pop()
                for e in (self.sigma[d], self.iota[d]):
                    if comp[e] < 0:
                        comp[e] = ncomp
                        stack.append(e)
            ncomp += 1
        vids, _ = _kernels.cycle_ids(sigma)
        fids, _ = _kernels.cycle_ids(_kernels.face_perm(sigma, iota))
        out = []
        for c in range(ncomp):
            darts = [d for d in range(n) if comp[d] == c]
            v = len({int(vids[d]) for d in darts})
            f = len({int(fids[d]) for d in darts})
            e = len(darts) // 2
            chi = v - e + f
            out.append(((2 - chi) // 2, v, e, f))
        return out

    def num_faces(self):
        sigma = np.asarray(self.sigma, dtype=np.int64)
        iota = np.asarray(self.iota, dtype=np.int64)
        return int(_kernels.count_cycles(_kernels.face_perm(sigma, iota)))


def _check_loop(m, loop):
    if not is_simple_loop(m, loop):
        raise LoopNotSimple(f"{tuple(loop)} is not a simple loop")
    if uses_edge_twice(m, loop):
        raise LoopContractible("loop backtracks along an edge")


def slit(m, loop, check=True):
    """Cut ``m`` along a simple loop."""
    loop = tuple(loop)
    try:
        _check_loop(m, loop)
    except NotALoop as exc:
        raise LoopNotSimple(str(exc)) from exc
    if check and is_contractible(m, loop):
        raise LoopContractible(f"{loop} is contractible")
    return _slit(m, loop)


def _slit(m, loop):
    k = len(loop)
    n = m.num_darts
    sigma = list(m.sigma) + [0] * (2 * k)
    iota = list(m.iota) + [0] * (2 * k)
    lf = list(loop)
    lb = [m.iota[d] for d in loop]
    rf = [n + 2 * i for i in range(k)]
    rb = [n + 2 * i + 1 for i in range(k)]
    for i in range(k):
        iota[rf[i]] = rb[i]
        iota[rb[i]] = rf[i]
    lefts, rights = loop_arcs(m, loop)
    for i in range(k):
        cyc = [lf[i]] + lefts[i] + [lb[i - 1]]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            sigma[a] = b
        cyc = [rb[i - 1]] + rights[i] + [rf[i]]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            sigma[a] = b
    pos_f = {d: i for i, d in enumerate(lf)}
    pos_b = {d: i for i, d in enumerate(lb)}
    root = m.root
    if root in pos_f:
        root = rf[pos_f[root]]
    # root == lb[i-1] stays: the left copy keeps the loop ids
    labels = None
    if m.dart_face_labels is not None:
        src = m.dart_face_labels
        labels = list(src) + [None] * (2 * k)
        for i in range(k):
            labels[rf[i]] = src[lf[i]]
            labels[lf[i]] = None
            labels[rb[i]] = None
            labels[lb[i]] = src[lb[i]]
        labels = tuple(labels)
    sides = {d: s for d, (_, s) in dart_sides(m, loop).items()}
    return SlitComplex(
        sigma=tuple(sigma),
        iota=tuple(iota),
        root=root,
        loop=loop,
        left_copy=tuple(lf),
        right_copy=tuple(rf),
        sides=sides,
        dart_labels=labels,
        num_original=n,
    )


def slit_pieces(m, loop):
    """``[(genus, darts)]`` of the pieces left after slitting (no checks)."""
    cx = _slit(m, tuple(loop))
    return [(c[0], c[2]) for c in cx.components()]


def sew(cx, offset=0):
    """Glue right copy edge ``i`` onto left copy edge ``i + offset``."""
    k = cx.k
    n = cx.num_original
    lf = cx.left_copy
    lb = cx.left_back
    rf = cx.right_copy
    rb = cx.right_back
    rename = {}
    for i in range(k):
        rename[rf[i]] = lf[i]
        rename[rb[i]] = lb[i]
        rename[lf[(i + offset) % k]] = lf[i]
        rename[lb[(i + offset) % k]] = lb[i]

    def rn(d):
        return rename.get(d, d)

    sigma = [0] * n
    loop_darts = set(lf) | set(lb)
    for d in range(n):
        if d not in loop_darts:
            sigma[d] = rn(cx.sigma[d])
    for i in range(k):
        sigma[lf[i]] = rn(cx.sigma[lf[(i + offset) % k]])
        sigma[lb[i - 1]] = rn(cx.sigma[rb[i - 1]])
    iota = list(cx.iota[:n])
    root = rn(cx.root)
    labels = None
    out = CombinatorialMap(tuple(sigma), tuple(iota), root, None)
    if cx.dart_labels is not None:
        dl = list(cx.dart_labels[:n])
        for i in range(k):
            dl[lf[i]] = cx.dart_labels[rf[i]]
            dl[lb[i]] = cx.dart_labels[lb[(i + offset) % k]]
        labels = []
        for f in out.faces:
            vals = {dl[d] for d in f}
            if len(vals) != 1:
                raise MapError(f"face labels collide after sewing: {sorted(vals)}")
            labels.append(vals.pop())
        out = CombinatorialMap(out.sigma, out.iota, out.root, tuple(labels), _validated=True)
    return out


@dataclass(frozen=True)
class RotationResult:
    map: CombinatorialMap
    loop: tuple
    sign: Sign


def rotate(m, loop, sign, check=True):
    """Rotate ``m`` one notch along a noncontractible simple loop.

    Right copy edge ``i`` is glued to left copy edge ``i + sign``: the left
    arc of loop vertex ``i + sign`` moves to vertex ``i``.  The image loop
    uses the same dart ids and the returned sign is flipped, so applying the
    result again restores the input.
    """
    sign = Sign(sign)
    cx = slit(m, loop, check=check)
    out = sew(cx, int(sign))
    return RotationResult(out, tuple(loop), sign.flip())


def _run_darts(m, loop, start, length):
    k = len(loop)
    if length >= 0:
        return [loop[(start + t) % k] for t in range(length)]
    return [m.iota[loop[(start - 1 - t) % k]] for t in range(-length)]


def transport_path(m, loop, sign, path):
    """Image in the rotated map of a path meeting the loop.

    The path must begin and end with darts off the loop.  Each contact with
    the loop (a maximal, possibly empty, run of loop darts between two
    off-loop darts) is rerouted along the image loop: arriving and leaving
    on the same side keeps the run length, crossing changes it by one.
    Returns ``(new_path, crossings)``.
    """
    sign = Sign(sign)
    loop = tuple(loop)
    k = len(loop)
    fwd_pos = {d: i for i, d in enumerate(loop)}
    back_pos = {m.iota[d]: i for i, d in enumerate(loop)}
    loop_vertex = {m.tail(d): i for i, d in enumerate(loop)}
    sides = dart_sides(m, loop)
    path = tuple(path)
    if not path:
        return (), 0
    if path[0] in fwd_pos or path[0] in back_pos or path[-1] in fwd_pos or path[-1] in back_pos:
        raise DecompositionInvalid("path must start and end off the loop")
    for a, b in zip(path, path[1:]):
        if m.head(a) != m.tail(b):
            raise DecompositionInvalid("not a path")

    def shift(side):
        return -int(sign) if side is Side.LEFT else 0

    out = []
    crossings = 0
    i = 0
    while i < len(path):
        d = path[i]
        out.append(d)
        if m.head(d) not in loop_vertex or i == len(path) - 1:
            i += 1
            continue
        # contact: collect the loop run after d
        j = i + 1
        run = []
        while path[j] in fwd_pos or path[j] in back_pos:
            run.append(path[j])
            j += 1
        y = path[j]
        if all(r in fwd_pos for r in run):
            direction = 1
        elif all(r in back_pos for r in run):
            direction = -1
        else:
            raise DecompositionInvalid("loop run changes direction")
        if run:
            expect = (
                _run_darts(m, loop, fwd_pos[run[0]], len(run))
                if direction == 1
                else _run_darts(m, loop, back_pos[run[0]] + 1, -len(run))
            )
            if list(run) != expect:
                raise DecompositionInvalid("loop run is not contiguous along the loop")
        side_in = sides[m.iota[d]][1]
        side_out = sides[y][1]
        start = loop_vertex[m.head(d)] + shift(side_in)
        delta = shift(side_out) - shift(side_in)
        length = direction * len(run) + delta
        out.extend(_run_darts(m, loop, start, length))
        if side_in is not side_out:
            crossings += 1
        i = j
    return tuple(out), crossings
