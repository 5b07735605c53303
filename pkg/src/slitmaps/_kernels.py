"""Hot permutation kernels.

Every kernel exists twice: a pure numpy/python version and a numba ``@njit``
compilation of the same source.  The numba path is used unless numba is
missing or ``SLITMAPS_NO_NUMBA`` is set to a non-empty value other than ``0``.

All arrays are ``int64``.  Darts are ``0 .. 2E-1``.
"""
import os

import numpy as np

_flag = os.environ.get("SLITMAPS_NO_NUMBA", "")
DISABLE_NUMBA = bool(_flag) and _flag != "0"

try:
    if DISABLE_NUMBA:
        raise ImportError
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on env
    numba = None
    HAVE_NUMBA = False


def _cycle_ids(perm):
    n = perm.shape[0]
    ids = np.full(n, -1, dtype=np.int64)
    count = 0
    for start in range(n):
        if ids[start] >= 0:
            continue
        d = start
        while ids[d] < 0:
            ids[d] = count
            d = perm[d]
        count += 1
    return ids, count


def _count_cycles(perm):
    n = perm.shape[0]
    seen = np.zeros(n, dtype=np.bool_)
    count = 0
    for start in range(n):
        if seen[start]:
            continue
        d = start
        while not seen[d]:
            seen[d] = True
            d = perm[d]
        count += 1
    return count


def _face_perm(sigma, iota):
    n = sigma.shape[0]
    out = np.empty(n, dtype=np.int64)
    for d in range(n):
        out[d] = sigma[iota[d]]
    return out


def _canonical_labeling(sigma, iota, root):
    # Labels darts in discovery order; a dart and its iota partner always get
    # consecutive labels so the canonical iota is (0 1)(2 3)...
    # Returns lab with lab[d] = new label, or lab containing -1 if disconnected.
    n = sigma.shape[0]
    lab = np.full(n, -1, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    lab[root] = 0
    order[0] = root
    partner = iota[root]
    lab[partner] = 1
    order[1] = partner
    nxt = 2
    head = 0
    while head < nxt:
        d = order[head]
        head += 1
        s = sigma[d]
        if lab[s] < 0:
            lab[s] = nxt
            order[nxt] = s
            nxt += 1
            t = iota[s]
            lab[t] = nxt
            order[nxt] = t
            nxt += 1
    return lab


def _is_canonical_sigma(sigma):
    # sigma over darts with iota (0 1)(2 3)..., root 0: is the canonical
    # relabeling the identity (and the map connected)?
    n = sigma.shape[0]
    lab = np.full(n, -1, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    lab[0] = 0
    lab[1] = 1
    order[0] = 0
    order[1] = 1
    nxt = 2
    head = 0
    while head < nxt:
        d = order[head]
        head += 1
        s = sigma[d]
        if lab[s] < 0:
            if s != nxt:
                return False
            lab[s] = nxt
            order[nxt] = s
            nxt += 1
            t = s ^ 1
            lab[t] = nxt
            order[nxt] = t
            nxt += 1
    return nxt == n


def _next_permutation(a):
    n = a.shape[0]
    i = n - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    lo = i + 1
    hi = n - 1
    while lo < hi:
        a[lo], a[hi] = a[hi], a[lo]
        lo += 1
        hi -= 1
    return True


def _canonical_rotation_systems(n_edges):
    # All sigma (lexicographic) that are canonical rooted maps with n_edges.
    n = 2 * n_edges
    perm = np.arange(n, dtype=np.int64)
    cap = 64
    out = np.empty((cap, n), dtype=np.int64)
    count = 0
    while True:
        if _is_canonical_sigma(perm):
            if count == cap:
                cap *= 2
                bigger = np.empty((cap, n), dtype=np.int64)
                bigger[:count] = out[:count]
                out = bigger
            out[count] = perm
            count += 1
        if not _next_permutation(perm):
            break
    return out[:count].copy()


def _perfect_matchings(n_edges):
    # All fixed-point-free involutions of 0..2n-1, lexicographic by the
    # sequence of partners chosen for the smallest unmatched point.
    n = 2 * n_edges
    total = 1
    for k in range(1, n, 2):
        total *= k
    out = np.empty((total, n), dtype=np.int64)
    cur = np.full(n, -1, dtype=np.int64)
    # choice stack: for the t-th pair, which partner index is tried
    stack_first = np.empty(n_edges + 1, dtype=np.int64)
    stack_partner = np.empty(n_edges + 1, dtype=np.int64)
    depth = 0
    count = 0
    stack_first[0] = 0
    stack_partner[0] = 0
    while depth >= 0:
        if depth == n_edges:
            out[count] = cur
            count += 1
            depth -= 1
            if depth >= 0:
                f = stack_first[depth]
                p = stack_partner[depth]
                cur[f] = -1
                cur[p] = -1
                stack_partner[depth] = p + 1
            continue
        f = stack_first[depth]
        if stack_partner[depth] <= f:
            stack_partner[depth] = f + 1
        p = stack_partner[depth]
        while p < n and cur[p] >= 0:
            p += 1
        if p >= n:
            depth -= 1
            if depth >= 0:
                f0 = stack_first[depth]
                p0 = stack_partner[depth]
                cur[f0] = -1
                cur[p0] = -1
                stack_partner[depth] = p0 + 1
            continue
        stack_partner[depth] = p
        cur[f] = p
        cur[p] = f
        nf = f + 1
        while nf < n and cur[nf] >= 0:
            nf += 1
        depth += 1
        if depth < n_edges:
            stack_first[depth] = nf
            stack_partner[depth] = nf + 1
    return out


def _polygon_vertex_counts(matchings):
    # sigma = phi o iota with phi the rotation d -> d+1 of the 2n-gon.
    m, n = matchings.shape
    out = np.empty(m, dtype=np.int64)
    sigma = np.empty(n, dtype=np.int64)
    for r in range(m):
        for d in range(n):
            sigma[d] = (matchings[r, d] + 1) % n
        out[r] = _count_cycles(sigma)
    return out


_PY = {
    "cycle_ids": _cycle_ids,
    "count_cycles": _count_cycles,
    "face_perm": _face_perm,
    "canonical_labeling": _canonical_labeling,
    "is_canonical_sigma": _is_canonical_sigma,
    "next_permutation": _next_permutation,
    "canonical_rotation_systems": _canonical_rotation_systems,
    "perfect_matchings": _perfect_matchings,
    "polygon_vertex_counts": _polygon_vertex_counts,
}


def _build_jit():
    jit = numba.njit(cache=True)
    k = {}
    k["cycle_ids"] = jit(_cycle_ids)
    k["count_cycles"] = cc = jit(_count_cycles)
    k["face_perm"] = jit(_face_perm)
    k["canonical_labeling"] = jit(_canonical_labeling)
    k["is_canonical_sigma"] = ics = jit(_is_canonical_sigma)
    k["next_permutation"] = nperm = jit(_next_permutation)

    # closures over jitted helpers: recompile bodies referencing them
    g = dict(_canonical_rotation_systems.__globals__)
    g.update(_is_canonical_sigma=ics, _next_permutation=nperm, _count_cycles=cc)
    crs = type(_canonical_rotation_systems)(_canonical_rotation_systems.__code__, g)
    pvc = type(_polygon_vertex_counts)(_polygon_vertex_counts.__code__, g)
    k["canonical_rotation_systems"] = jit(crs)
    k["perfect_matchings"] = jit(_perfect_matchings)
    k["polygon_vertex_counts"] = jit(pvc)
    return k


_JIT = _build_jit() if HAVE_NUMBA else None


def backend():
    """Name of the active kernel backend: ``"numba"`` or ``"python"``."""
    return "numba" if _JIT is not None else "python"


def get(name, use_numba=None):
    """Return kernel ``name`` from the requested (default: active) backend."""
    if use_numba is None:
        use_numba = _JIT is not None
    if use_numba:
        if _JIT is None:
            raise RuntimeError("numba backend unavailable")
        return _JIT[name]
    return _PY[name]


def cycle_ids(perm):
    return get("cycle_ids")(perm)


def count_cycles(perm):
    return get("count_cycles")(perm)


def face_perm(sigma, iota):
    return get("face_perm")(sigma, iota)


def canonical_labeling(sigma, iota, root):
    return get("canonical_labeling")(sigma, iota, root)


def canonical_rotation_systems(n_edges):
    return get("canonical_rotation_systems")(n_edges)


def perfect_matchings(n_edges):
    return get("perfect_matchings")(n_edges)


def polygon_vertex_counts(matchings):
    return get("polygon_vertex_counts")(matchings)
