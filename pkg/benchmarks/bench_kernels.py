"""Compare the numba and numpy brute-force kernels.

    python3 benchmarks/bench_kernels.py [--max-n 8] [--repeat 3]

Each row times one kernel on one size with both backends and checks that
the outputs agree.  Numba timings exclude the first (compiling) call.
"""

import argparse
import time

import numpy as np

from transfersys import _kernels
from transfersys.core import enumerate_all


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def cases(n):
    npairs = n * (n - 1) // 2
    systems = np.array([o.mask for o in enumerate_all(n)], dtype=np.int64)
    if npairs <= 22:
        subsets = np.arange(1 << npairs, dtype=np.int64)
    else:
        subsets = np.random.default_rng(0).integers(0, 1 << npairs, size=1 << 22, dtype=np.int64)
    required = {}

    def valid(impl):
        return lambda: impl(n, subsets)

    def req(impl):
        return lambda: impl(n, systems)

    def partners(impl):
        if "r" not in required:
            required["r"] = _kernels.required_masks_numpy(n, systems)
        return lambda: impl(required["r"], systems)

    return [
        ("valid_masks", len(subsets), valid, "valid_masks"),
        ("required_masks", len(systems), req, "required_masks"),
        ("partner_counts", len(systems) ** 2, partners, "partner_counts"),
    ]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-n", type=int, default=5)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    has_numba = hasattr(_kernels, "valid_masks_numba")
    print(f"active backend: {_kernels.BACKEND}")
    print(f"{'kernel':<16}{'n':>3}{'work':>12}{'numpy s':>11}{'numba s':>11}{'speedup':>9}")
    for n in range(args.min_n, args.max_n + 1):
        for name, work, make, attr in cases(n):
            t_np, out_np = best_of(make(getattr(_kernels, attr + "_numpy")), args.repeat)
            if has_numba:
                fn = make(getattr(_kernels, attr + "_numba"))
                fn()  # compile
                t_nb, out_nb = best_of(fn, args.repeat)
                assert np.array_equal(out_np, out_nb), (name, n)
                nb, speed = f"{t_nb:11.4f}", f"{t_np / t_nb:8.1f}x"
            else:
                nb, speed = f"{'n/a':>11}", f"{'n/a':>9}"
            print(f"{name:<16}{n:>3}{work:>12}{t_np:11.4f}{nb}{speed}")


if __name__ == "__main__":
    main()
