# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled accumulation kernels: chunked Kahan-compensated phase sums.

Same reduction contract as the pure-python fallback: index order within
chunks, Kahan compensation across chunk boundaries.
"""
from libc.math cimport cos, sin

import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

cdef double TWO_PI = 6.283185307179586476925286766559


cdef inline void _kahan(double *total, double *comp, double term) noexcept nogil:
    cdef double y = term - comp[0]
    cdef double t = total[0] + y
    comp[0] = (t - total[0]) - y
    total[0] = t


def compensated_exp_sum(phases, Py_ssize_t chunk=4096):
    """Sum of e(phase_i) over float phases in [0,1); returns (value, err)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ph = np.ascontiguousarray(phases, dtype=np.float64)
    cdef Py_ssize_t n = ph.shape[0]
    cdef Py_ssize_t i, j, end
    cdef double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0
    cdef double pre, pim, ang
    cdef double tre, tim, cc_re, cc_im
    tre = 0.0; tim = 0.0; cc_re = 0.0; cc_im = 0.0
    i = 0
    while i < n:
        end = i + chunk
        if end > n:
            end = n
        pre = 0.0; pim = 0.0; cre = 0.0; cim = 0.0
        for j in range(i, end):
            ang = TWO_PI * ph[j]
            _kahan(&pre, &cre, cos(ang))
            _kahan(&pim, &cim, sin(ang))
        _kahan(&tre, &cc_re, pre)
        _kahan(&tim, &cc_im, pim)
        i = end
    err = 4.0 * 2.220446049250313e-16 * max(n, 1)
    return complex(tre, tim), err


DEF TABLE_MAX_BITS = 20


def spectrum_mags(u, int tbits, Py_ssize_t chunk=4096):
    """|S_h| for h = 0..2^t-1 over the uint64 value window u (t <= 32).

    For t <= 20 the 2^t roots of unity are tabulated once and shared by
    every h (the phase (h*u mod 2^t)/2^t only ever hits those angles).
    """
    if tbits > 32:
        raise ValueError("spectrum sweep requires t <= 32")
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] uu = np.ascontiguousarray(u, dtype=np.uint64)
    cdef Py_ssize_t n = uu.shape[0]
    cdef unsigned long long m = (<unsigned long long>1) << tbits
    cdef unsigned long long mask = m - 1
    cdef double inv_m = 1.0 / <double>m
    cdef cnp.ndarray[cnp.float64_t, ndim=1] mags = np.empty(m, dtype=np.float64)
    cdef unsigned long long h
    cdef Py_ssize_t i, j, end
    cdef double re, im, cre, cim, pre, pim, pcre, pcim, ang
    cdef bint use_table = tbits <= TABLE_MAX_BITS
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ct_arr, st_arr
    cdef double *ct = NULL
    cdef double *st = NULL
    if use_table:
        angles = TWO_PI * np.arange(m, dtype=np.float64) * inv_m
        ct_arr = np.cos(angles)
        st_arr = np.sin(angles)
        ct = &ct_arr[0]
        st = &st_arr[0]
    with nogil:
        for h in range(m):
            re = 0.0; im = 0.0; cre = 0.0; cim = 0.0
            i = 0
            while i < n:
                end = i + chunk
                if end > n:
                    end = n
                pre = 0.0; pim = 0.0; pcre = 0.0; pcim = 0.0
                if use_table:
                    for j in range(i, end):
                        _kahan(&pre, &pcre, ct[(h * uu[j]) & mask])
                        _kahan(&pim, &pcim, st[(h * uu[j]) & mask])
                else:
                    for j in range(i, end):
                        ang = TWO_PI * (<double>((h * uu[j]) & mask)) * inv_m
                        _kahan(&pre, &pcre, cos(ang))
                        _kahan(&pim, &pcim, sin(ang))
                _kahan(&re, &cre, pre)
                _kahan(&im, &cim, pim)
                i = end
            mags[h] = (re * re + im * im) ** 0.5
    return mags
