# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled sector-scan kernels.

Sturm-count bisection for the lowest eigenvalue of the small symmetric
tridiagonal sector blocks. The arithmetic mirrors tclab._scan_py
operation for operation so both backends agree bit for bit.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt
from libc.stdlib cimport free, malloc

cnp.import_array()

cdef double PIVMIN = 1e-290


cdef int _sturm_count(const double* d, const double* e2, int dim, double x) noexcept nogil:
    cdef int i, cnt = 0
    cdef double q = d[0] - x
    if q < 0:
        cnt += 1
    for i in range(1, dim):
        if fabs(q) < PIVMIN:
            q = -PIVMIN
        q = d[i] - x - e2[i - 1] / q
        if q < 0:
            cnt += 1
    return cnt


cdef double _lowest(const double* d, const double* e, const double* e2, int dim) noexcept nogil:
    cdef int i
    cdef double r, lo, hi, mid, cand
    if dim == 1:
        return d[0]
    lo = d[0] - e[0]
    hi = d[0] + e[0]
    for i in range(1, dim):
        r = e[i - 1]
        if i < dim - 1:
            r += e[i]
        cand = d[i] - r
        if cand < lo:
            lo = cand
        cand = d[i] + r
        if cand > hi:
            hi = cand
    if fabs(hi) < 1.0:
        hi = hi + 1e-13
    else:
        hi = hi + fabs(hi) * 1e-13
    while True:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            return hi
        if _sturm_count(d, e2, dim, mid) >= 1:
            hi = mid
        else:
            lo = mid


def scan_lowest(double omega_c, double delta, double lam, int M, int k_max):
    """Lowest sector eigenvalue for every k = 0 .. k_max."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(k_max + 1, dtype=np.float64)
    cdef double[::1] out_v = out
    cdef int D = min(k_max, M) + 1
    cdef double* d = <double*> malloc(D * sizeof(double))
    cdef double* e = <double*> malloc(max(D - 1, 1) * sizeof(double))
    cdef double* e2 = <double*> malloc(max(D - 1, 1) * sizeof(double))
    if d == NULL or e == NULL or e2 == NULL:
        free(d); free(e); free(e2)
        raise MemoryError()
    cdef int k, n, dim
    cdef double coef = lam / sqrt(<double> M)
    cdef double kk, nn, prod
    with nogil:
        for k in range(k_max + 1):
            dim = (k if k < M else M) + 1
            kk = <double> k
            for n in range(dim):
                nn = <double> n
                d[n] = omega_c * (kk - 0.5 * M) + delta * (0.5 * (2.0 * nn - M))
            for n in range(dim - 1):
                nn = <double> n
                prod = ((kk - nn) * (M - nn)) * (nn + 1.0)
                e[n] = coef * sqrt(prod)
                e2[n] = e[n] * e[n]
            out_v[k] = _lowest(d, e, e2, dim)
    free(d); free(e); free(e2)
    return out


def lowest_value(diag, offdiag):
    """Lowest eigenvalue of one real symmetric tridiagonal matrix."""
    cdef const double[::1] d = np.ascontiguousarray(diag, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] e_arr = np.abs(np.asarray(offdiag, dtype=np.float64))
    cdef int dim = d.shape[0]
    if e_arr.shape[0] != dim - 1:
        raise ValueError("offdiag must have length len(diag) - 1")
    cdef cnp.ndarray[cnp.float64_t, ndim=1] e2_arr = e_arr * e_arr
    cdef const double[::1] e = e_arr
    cdef const double[::1] e2 = e2_arr
    cdef double res
    if dim == 1:
        return float(d[0])
    with nogil:
        res = _lowest(&d[0], &e[0], &e2[0], dim)
    return float(res)
