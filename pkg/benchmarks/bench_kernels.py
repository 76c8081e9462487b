"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Compilation is triggered once before timing.  Each row also checks that the
two backends return identical histograms.
"""
import argparse
import math
import time

import numpy as np

from lecturehall import kernels

CASES = [
    ("stat", (5,) * 9),
    ("stat", (1, 1, 2, 3, 5, 8, 13, 21, 34)),
    ("stat", tuple(range(1, 11))),
    ("qstat", (1, 1, 2, 3, 5, 8, 13, 21, 34, 55)),
    ("fiber", (1, 1, 2, 3, 5, 8, 13, 21, 34, 55)),
    ("parallelepiped", tuple(range(1, 11))),
]


def _call(kind, s, backend):
    if kind == "stat":
        return kernels.stat_histogram(s, backend)
    if kind == "qstat":
        return kernels.qstat_histogram(s[:-1], s[-1], backend)
    if kind == "fiber":
        return np.array(kernels.fiber_scan(s[:-1], s[-1], backend) or (-1, -1))
    return kernels.parallelepiped_histogram(s, backend)


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    for kind, s in CASES:
        _call(kind, (2, 2, 2), "numba")

    print(f"{'kernel':<15}{'signature':<30}{'size':>12}{'numba s':>10}{'numpy s':>10}{'speedup':>9}  same")
    for kind, s in CASES:
        t_nb, out_nb = best_of(args.repeat, lambda: _call(kind, s, "numba"))
        t_np, out_np = best_of(args.repeat, lambda: _call(kind, s, "numpy"))
        same = np.array_equal(out_nb, out_np)
        size = math.prod(s[:-1]) if kind in ("qstat", "fiber") else math.prod(s)
        print(f"{kind:<15}{str(s):<30}{size:>12}{t_nb:>10.3f}{t_np:>10.3f}"
              f"{t_np / t_nb:>8.1f}x  {same}")


if __name__ == "__main__":
    main()
