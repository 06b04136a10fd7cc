"""Pure-numpy fallback for the sector-scan kernels.

Implements exactly the same Sturm-count bisection as the compiled
extension (tclab._scan), vectorized across sectors: every lane follows
the same arithmetic sequence as the scalar C loop, so the two backends
produce identical numbers.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["scan_lowest", "lowest_value"]

_PIVMIN = 1e-290
_PAD = 1e300


def _sturm_counts(d: np.ndarray, e2: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Number of eigenvalues strictly below x, per lane.

    d: (L, D) diagonals (padded lanes hold _PAD), e2: (L, D-1) squared
    off-diagonals (0 on padding), x: (L,) evaluation points.
    """
    q = d[:, 0] - x
    cnt = (q < 0).astype(np.int64)
    for i in range(1, d.shape[1]):
        q = np.where(np.abs(q) < _PIVMIN, -_PIVMIN, q)
        q = d[:, i] - x - e2[:, i - 1] / q
        cnt += q < 0
    return cnt


def _bisect_lanes(d: np.ndarray, e: np.ndarray, dims: np.ndarray) -> np.ndarray:
    """Lowest eigenvalue per lane of padded tridiagonal batches."""
    L, D = d.shape
    e2 = e * e
    valid = np.arange(D)[None, :] < dims[:, None]

    r = np.zeros_like(d)
    if D > 1:
        r[:, :-1] += e
        r[:, 1:] += e
    lo = np.where(valid, d - r, np.inf).min(axis=1)
    hi = np.where(valid, d + r, -np.inf).max(axis=1)
    hi = hi + np.maximum(1.0, np.abs(hi)) * 1e-13

    out = np.where(dims == 1, d[:, 0], np.nan)
    active = dims > 1
    while active.any():
        mid = 0.5 * (lo + hi)
        done = active & ((mid == lo) | (mid == hi))
        active = active & ~done
        if not active.any():
            break
        cnt = _sturm_counts(d, e2, mid)
        below = cnt >= 1
        hi = np.where(active & below, mid, hi)
        lo = np.where(active & ~below, mid, lo)
    return np.where(dims == 1, out, hi)


def scan_lowest(omega_c: float, delta: float, lam: float, M: int, k_max: int) -> np.ndarray:
    """Lowest sector eigenvalue for every k = 0 .. k_max."""
    K = k_max + 1
    D = min(k_max, M) + 1
    k = np.arange(K, dtype=np.float64)[:, None]
    n = np.arange(D, dtype=np.float64)[None, :]
    dims = np.minimum(np.arange(K), M) + 1

    d = omega_c * (k - 0.5 * M) + delta * (0.5 * (2.0 * n - M))
    d = np.where(n < dims[:, None], d, _PAD)

    if D > 1:
        noff = n[:, :-1]
        valid_off = noff < (dims[:, None] - 1)
        prod = np.where(valid_off, ((k - noff) * (M - noff)) * (noff + 1.0), 0.0)
        coef = lam / math.sqrt(M)
        e = coef * np.sqrt(prod)
    else:
        e = np.zeros((K, 0))
    return _bisect_lanes(d, e, dims)


def lowest_value(diag: np.ndarray, offdiag: np.ndarray) -> float:
    """Lowest eigenvalue of one real symmetric tridiagonal matrix."""
    d = np.asarray(diag, dtype=np.float64).reshape(1, -1)
    e = np.abs(np.asarray(offdiag, dtype=np.float64)).reshape(1, -1)
    if e.shape[1] != d.shape[1] - 1:
        raise ValueError("offdiag must have length len(diag) - 1")
    dims = np.array([d.shape[1]])
    return float(_bisect_lanes(d, e, dims)[0])
