"""Time the enumeration kernels under numba and under plain python.

    python3 benchmarks/bench_kernels.py [--n 6] [--repeat 3]

Both backends must agree; the script exits non-zero if they do not.
"""
import argparse
import sys
import time

import numpy as np

from slitmaps import _kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, default=6, help="edges for the polygon gluings")
    p.add_argument("--rot-n", type=int, default=4, help="edges for the rotation systems")
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()

    if not _kernels.HAVE_NUMBA:
        print("numba unavailable; only the python backend can run")

    jobs = [
        ("perfect_matchings", lambda k: k(args.n)),
        ("canonical_rotation_systems", lambda k: k(args.rot_n)),
    ]
    matchings = _kernels.get("perfect_matchings", use_numba=False)(args.n)
    jobs.append(("polygon_vertex_counts", lambda k: k(matchings)))

    ok = True
    print(f"{'kernel':28s} {'python s':>10s} {'numba s':>10s} {'speedup':>8s}")
    for name, call in jobs:
        t_py, ref = best_of(lambda: call(_kernels.get(name, use_numba=False)), args.repeat)
        if _kernels.HAVE_NUMBA:
            jit = _kernels.get(name, use_numba=True)
            call(jit)  # compile
            t_nb, got = best_of(lambda: call(jit), args.repeat)
            same = np.array_equal(np.asarray(ref), np.asarray(got))
            ok &= same
            flag = "" if same else "  MISMATCH"
            print(f"{name:28s} {t_py:10.4f} {t_nb:10.4f} {t_py / t_nb:8.1f}{flag}")
        else:
            print(f"{name:28s} {t_py:10.4f} {'-':>10s} {'-':>8s}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
