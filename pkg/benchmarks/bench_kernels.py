#!/usr/bin/env python3
"""Benchmark the linkage-enumeration kernel: numba @njit vs pure numpy.

The kernel scans all 3^l sign vectors and evaluates the integral quadratic
form on each.  Both backends are exact int64; this script times them on the
largest supported ranks.  Select a backend globally with CARTERLINK_KERNEL.
"""

import time

import numpy as np

import carterlink as cl
from carterlink import _kernels


def time_backend(fn, grid, n_mat, threshold, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(grid, n_mat, threshold)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    numba_fn = _kernels._numba_mask()
    if numba_fn is None:
        print("numba not importable; only the numpy path is available")
    rows = []
    for l, name in [(8, "D8(a1)"), (10, "D10(a3)"), (12, "D12(a5)")]:
        pc = cl.build_partial_cartan(cl.catalog(name))
        den, scaled = pc.b_inv_scaled()
        n_mat = np.array(scaled, dtype=np.int64)
        grid = _kernels.ternary_grid(l)
        t_numpy = time_backend(_kernels._mask_numpy, grid, n_mat, 2 * den)
        if numba_fn is not None:
            numba_fn(grid, n_mat, 2 * den)  # compile outside the timing
            t_numba = time_backend(numba_fn, grid, n_mat, 2 * den)
        else:
            t_numba = float("nan")
        rows.append((name, 3**l, t_numpy, t_numba))
    print(f"{'diagram':>10s} {'grid':>8s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}")
    for name, size, t_np, t_nb in rows:
        ratio = t_np / t_nb if t_nb == t_nb and t_nb > 0 else float("nan")
        print(f"{name:>10s} {size:>8d} {t_np * 1e3:>8.2f}ms {t_nb * 1e3:>8.2f}ms {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
