"""Time the numba and numpy backends on the two hot loops.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from tensorwalk import _kernels
from tensorwalk.chain import build_kernel, lazy
from tensorwalk.families import make_spec

CASES = [
    ("sl2p", 101, "natural"),
    ("quantum", 31, "natural"),
    ("sl3p", 23, "natural"),
    ("sl2_2n", 8, "uniform"),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--walks", type=int, default=20000)
    ap.add_argument("--steps", type=int, default=200)
    ap.add_argument("--lmax", type=int, default=2000)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not available; nothing to compare")

    print(f"{'case':<22}{'kernel':<10}{'numpy s':>10}{'numba s':>10}{'speedup':>9}  same")
    for tag, v, tensor in CASES:
        k = lazy(build_kernel(make_spec((tag, v), tensor)))
        cum, P, pi = k.cumulative, k.dense, k.pi_float
        U = np.random.default_rng(0).random((args.walks, args.steps))
        # warm the jit cache outside the timing
        _kernels.walk_numba(cum, 0, U[:2])
        _kernels.distance_series_numba(P, 0, 2, pi)

        t_np, a = best_of(lambda: _kernels.walk_numpy(cum, 0, U), args.repeat)
        t_nb, b = best_of(lambda: _kernels.walk_numba(cum, 0, U), args.repeat)
        name = f"{tag}({v}) {tensor}"
        print(f"{name:<22}{'walk':<10}{t_np:>10.3f}{t_nb:>10.3f}{t_np / t_nb:>9.1f}  {bool((a == b).all())}")

        t_np, a = best_of(lambda: _kernels.distance_series_numpy(P, 0, args.lmax, pi), args.repeat)
        t_nb, b = best_of(lambda: _kernels.distance_series_numba(P, 0, args.lmax, pi), args.repeat)
        same = np.allclose(a[0], b[0], rtol=0, atol=1e-12)
        print(f"{'':<22}{'distance':<10}{t_np:>10.3f}{t_nb:>10.3f}{t_np / t_nb:>9.1f}  {same}")


if __name__ == "__main__":
    main()
