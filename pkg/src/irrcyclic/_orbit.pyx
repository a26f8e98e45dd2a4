# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled field orbit kernel.

Same contract as the pure fallback: base-p encodings of successive powers of
a fixed primitive element, given its multiplication matrix on the coefficient
basis.  Characteristic two gets a bitmask path (one machine word per column).
"""

import numpy as np


def alpha_orbit(int p, int d, mult, long long count):
    if d > 63:
        raise ValueError("degree above 63 not supported by the compiled kernel")
    m = np.ascontiguousarray(np.asarray(mult, dtype=np.int64) % p)
    out = np.empty(count, dtype=np.int64)
    cdef long long[:, ::1] mv = m
    cdef long long[::1] outv = out
    if count == 0:
        return out
    if p == 2:
        _orbit2(mv, outv, d, count)
    else:
        _orbitp(mv, outv, p, d, count)
    return out


cdef void _orbit2(long long[:, ::1] m, long long[::1] out, int d, long long count) noexcept:
    cdef unsigned long long cols[64]
    cdef unsigned long long v = 1, nv
    cdef int i, j
    cdef long long k
    for i in range(d):
        nv = 0
        for j in range(d):
            if m[j, i] & 1:
                nv |= (<unsigned long long> 1) << j
        cols[i] = nv
    for k in range(count):
        out[k] = <long long> v
        nv = 0
        for i in range(d):
            if (v >> i) & 1:
                nv ^= cols[i]
        v = nv


cdef void _orbitp(long long[:, ::1] m, long long[::1] out, int p, int d, long long count) noexcept:
    cdef long long v[64]
    cdef long long nv[64]
    cdef long long pw[64]
    cdef int i, j
    cdef long long k, acc, enc
    for i in range(d):
        v[i] = 0
    v[0] = 1
    pw[0] = 1
    for i in range(1, d):
        pw[i] = pw[i - 1] * p
    for k in range(count):
        enc = 0
        for i in range(d):
            enc += v[i] * pw[i]
        out[k] = enc
        for j in range(d):
            acc = 0
            for i in range(d):
                acc += m[j, i] * v[i]
            nv[j] = acc % p
        for j in range(d):
            v[j] = nv[j]
