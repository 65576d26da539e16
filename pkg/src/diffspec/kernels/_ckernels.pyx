# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels`` (same contracts)."""

from libc.stdint cimport int64_t
from libc.string cimport memset

import numpy as np


cdef inline int64_t _dlog(const int64_t[::1] zech, int64_t o, int64_t h,
                          int64_t d, int64_t L) noexcept nogil:
    cdef int64_t a = (d * zech[L]) % o
    cdef int64_t b = (d * L) % o
    if a == b:
        return o
    return (b + h + zech[(a - b + h + o) % o]) % o


def derivative_logs(const int64_t[::1] zech, int64_t d, logs):
    cdef const int64_t[::1] L = np.ascontiguousarray(logs, dtype=np.int64)
    cdef Py_ssize_t i, m = L.shape[0]
    cdef int64_t o = zech.shape[0]
    cdef int64_t h = o // 2
    result = np.empty(m, dtype=np.int64)
    cdef int64_t[::1] r = result
    with nogil:
        for i in range(m):
            r[i] = _dlog(zech, o, h, d, L[i])
    return result


def derivative_log_counts(const int64_t[::1] zech, int64_t d, int64_t lo, int64_t hi,
                          int64_t[::1] out):
    cdef int64_t o = zech.shape[0]
    cdef int64_t h = o // 2
    cdef int64_t L
    with nogil:
        for L in range(lo, hi):
            if L != h:
                out[_dlog(zech, o, h, d, L)] += 1


def exponent_deltas(const int64_t[::1] zech, ds, int64_t cap=-1):
    cdef const int64_t[::1] dv = np.ascontiguousarray(ds, dtype=np.int64)
    cdef int64_t o = zech.shape[0]
    cdef int64_t h = o // 2
    cdef Py_ssize_t i, m = dv.shape[0]
    cdef int64_t L, d, best, c
    cdef bint capped = cap >= 0
    buf = np.zeros(o + 1, dtype=np.int64)
    cdef int64_t[::1] counts = buf
    result = np.empty(m, dtype=np.int64)
    cdef int64_t[::1] r = result
    with nogil:
        for i in range(m):
            d = dv[i]
            memset(&counts[0], 0, (o + 1) * sizeof(int64_t))
            # boundary points first so an early exit sees them
            counts[0] += 1
            if d % 2 == 0:
                counts[h] += 1
            else:
                counts[0] += 1
            best = counts[0] if counts[0] > counts[h] else counts[h]
            for L in range(o):
                if L != h:
                    c = _dlog(zech, o, h, d, L)
                    counts[c] += 1
                    if counts[c] > best:
                        best = counts[c]
                        if capped and best > cap:
                            break
            if capped and best > cap:
                best = cap + 1
            r[i] = best
    return result
