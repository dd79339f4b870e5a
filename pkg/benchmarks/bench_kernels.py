"""Compare the numba and numpy tabulation backends.

    python benchmarks/bench_kernels.py --n 7 8 9 10 --repeat 3

Each row times one joint histogram of (S10, S12, S17) over S_n and checks
that both backends return the same array.
"""

import argparse
import time

import numpy as np

from permstat.distribution import joint_histogram
from permstat.stats import Named


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[7, 8, 9, 10])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args(argv)

    stats = [Named(10), Named(12), Named(17)]
    joint_histogram(stats, 4, backend="numba")  # compile before timing

    print(f"{'n':>3} {'numba s':>10} {'numpy s':>10} {'speedup':>8}  same")
    for n in args.n:
        tn, a = best_of(lambda: joint_histogram(stats, n, cap=n, backend="numba", workers=args.workers), args.repeat)
        tp, b = best_of(lambda: joint_histogram(stats, n, cap=n, backend="numpy", workers=args.workers), args.repeat)
        print(f"{n:>3} {tn:>10.4f} {tp:>10.4f} {tp / tn:>8.1f}  {np.array_equal(a, b)}")


if __name__ == "__main__":
    main()
