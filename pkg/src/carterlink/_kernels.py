"""Hot integer kernels: quadratic-form scan over the {-1,0,1}^l grid.

The linkage enumeration evaluates v^T N v for every v in {-1,0,1}^l, where
N = den * B^-1 is integral.  Everything stays in int64, so both backends are
exact; values are bounded by l^2 * max|N| and never approach overflow for
the supported ranks (l <= 12, |N| <= 24).

Backend selection: CARTERLINK_KERNEL may be "numba", "numpy" or "auto"
(default).  Auto uses numba when importable and falls back to pure numpy.
Numba is imported lazily on first use so that short CLI runs do not pay the
import cost.  See benchmarks/bench_kernels.py for a comparison.
"""

from __future__ import annotations

import os

import numpy as np

_GRID_CACHE: dict[int, np.ndarray] = {}
_NUMBA_MASK = None
_NUMBA_PROBED = False


def ternary_grid(l: int) -> np.ndarray:
    """All vectors of {-1,0,1}^l as an int8 array in lexicographic order."""
    if l in _GRID_CACHE:
        return _GRID_CACHE[l]
    m = 3**l
    idx = np.arange(m, dtype=np.int64)
    cols = [((idx // 3 ** (l - 1 - p)) % 3).astype(np.int8) - 1 for p in range(l)]
    grid = np.stack(cols, axis=1)
    grid.setflags(write=False)
    _GRID_CACHE[l] = grid
    return grid


def _mask_numpy(grid: np.ndarray, n_mat: np.ndarray, threshold: int) -> np.ndarray:
    g = grid.astype(np.int64)
    q = np.einsum("ij,jk,ik->i", g, n_mat, g)
    return q < threshold


def _numba_mask():
    global _NUMBA_MASK, _NUMBA_PROBED
    if _NUMBA_PROBED:
        return _NUMBA_MASK
    _NUMBA_PROBED = True
    try:
        from numba import njit
    except ImportError:
        return None

    @njit(cache=True)
    def mask(grid, n_mat, threshold):  # pragma: no cover - compiled
        m, l = grid.shape
        out = np.empty(m, dtype=np.bool_)
        for r in range(m):
            acc = 0
            for i in range(l):
                gi = grid[r, i]
                if gi == 0:
                    continue
                s = 0
                for j in range(l):
                    gj = grid[r, j]
                    if gj != 0:
                        s += n_mat[i, j] * gj
                acc += gi * s
            out[r] = acc < threshold
        return out

    _NUMBA_MASK = mask
    return mask


def backend() -> str:
    """The backend that linkage_mask will use right now."""
    choice = os.environ.get("CARTERLINK_KERNEL", "auto").lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if _numba_mask() is None:
            raise RuntimeError("CARTERLINK_KERNEL=numba but numba is not importable")
        return "numba"
    return "numba" if _numba_mask() is not None else "numpy"


def linkage_mask(n_mat: np.ndarray, threshold: int, l: int) -> np.ndarray:
    """Boolean mask over ternary_grid(l) selecting v with v^T n_mat v < threshold."""
    grid = ternary_grid(l)
    n64 = np.ascontiguousarray(n_mat, dtype=np.int64)
    if backend() == "numba":
        return _numba_mask()(grid, n64, threshold)
    return _mask_numpy(grid, n64, threshold)
