# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; a line-for-line port of ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport exp, log, pow, floor, isfinite, INFINITY

cnp.import_array()

NAME = "cython"

cdef double LANCZOS_G = 6.024680040776729583740234375
cdef double LANCZOS_G_MINUS_HALF = 5.524680040776729583740234375

cdef double[13] LANCZOS_NUM = [
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
]
cdef double[13] LANCZOS_DEN = [
    0.0, 39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0,
    13339535.0, 2637558.0, 357423.0, 32670.0, 1925.0, 66.0, 1.0,
]
cdef double[23] FACTORIALS

cdef int _i
FACTORIALS[0] = 1.0
for _i in range(1, 23):
    FACTORIALS[_i] = FACTORIALS[_i - 1] * _i


cdef inline double _lanczos_sum(double x) noexcept nogil:
    cdef double num = 0.0, den = 0.0
    cdef int i
    if x < 5.0:
        for i in range(12, -1, -1):
            num = num * x + LANCZOS_NUM[i]
            den = den * x + LANCZOS_DEN[i]
    else:
        for i in range(13):
            num = num / x + LANCZOS_NUM[i]
            den = den / x + LANCZOS_DEN[i]
    return num / den


cdef double _gamma(double x) noexcept nogil:
    cdef double y, q, z, r, sqrtpow
    if x == floor(x) and x <= 23.0:
        return FACTORIALS[<int>x - 1]
    y = x + LANCZOS_G_MINUS_HALF
    if x > LANCZOS_G_MINUS_HALF:
        q = y - x
        z = q - LANCZOS_G_MINUS_HALF
    else:
        q = y - LANCZOS_G_MINUS_HALF
        z = q - x
    z = z * LANCZOS_G / y
    r = _lanczos_sum(x) / exp(y)
    r += z * r
    sqrtpow = pow(y, x / 2.0 - 0.25)
    r *= sqrtpow
    r *= sqrtpow
    return r


cdef double _lgamma(double x) noexcept nogil:
    cdef double r
    if x == floor(x) and x <= 23.0:
        return log(FACTORIALS[<int>x - 1])
    r = log(_lanczos_sum(x)) - LANCZOS_G
    r += (x - 0.5) * (log(x + LANCZOS_G - 0.5) - 1.0)
    return r


def lanczos_sum(double x):
    return _lanczos_sum(x)


def gamma_lanczos(double x):
    return _gamma(x)


def lgamma_lanczos(double x):
    return _lgamma(x)


def ratio_exp(double a, double b):
    return exp(_lgamma(a) - _lgamma(b))


def derivative_coeffs(const double[::1] coeffs, double alpha):
    cdef Py_ssize_t n = coeffs.shape[0], k
    if n <= 1:
        return np.zeros(1)
    out = np.empty(n - 1)
    cdef double[::1] o = out
    cdef double lo = _lgamma(1.0), hi
    for k in range(1, n):
        hi = _lgamma(1.0 + k * alpha)
        o[k - 1] = coeffs[k] * exp(hi - lo)
        lo = hi
    return out


def integral_coeffs(const double[::1] coeffs, double alpha):
    cdef Py_ssize_t n = coeffs.shape[0], k
    out = np.empty(n + 1)
    cdef double[::1] o = out
    cdef double lo = _lgamma(1.0), hi
    o[0] = 0.0
    for k in range(n):
        hi = _lgamma(1.0 + (k + 1) * alpha)
        o[k + 1] = coeffs[k] * exp(lo - hi)
        lo = hi
    return out


cdef inline double _eval(const double[::1] c, double alpha, double h) noexcept nogil:
    cdef Py_ssize_t n = c.shape[0] - 1, k
    cdef double p, s
    if h == 0.0 or n == 0:
        return c[0]
    p = exp(alpha * log(h))
    s = c[n]
    for k in range(n - 1, -1, -1):
        s = s * p + c[k]
    return s


def eval_offset(const double[::1] coeffs, double alpha, double h):
    return _eval(coeffs, alpha, h)


def eval_offsets(const double[::1] coeffs, double alpha, const double[::1] h):
    # degree loop outermost so the inner update vectorizes across points
    cdef Py_ssize_t m = h.shape[0], n = coeffs.shape[0] - 1, i, k
    out = np.empty(m)
    p_buf = np.empty(m)
    cdef double[::1] o = out
    cdef double[::1] p = p_buf
    cdef double ck
    with nogil:
        for i in range(m):
            # p = 0 at the center makes Horner return c_0
            p[i] = exp(alpha * log(h[i])) if h[i] > 0.0 else 0.0
            o[i] = coeffs[n]
        for k in range(n - 1, -1, -1):
            ck = coeffs[k]
            for i in range(m):
                o[i] = o[i] * p[i] + ck
    return out


def ml_series(double alpha, double x, double rel_tol, long max_terms):
    cdef double lx, total = 0.0, prev = INFINITY, t, nxt, ratio, tail
    cdef long k
    if x == 0.0:
        return 1.0, 1, 0.0, True
    lx = log(x)
    for k in range(max_terms):
        t = exp(k * alpha * lx - _lgamma(1.0 + k * alpha))
        total += t
        if not isfinite(total):
            return total, k + 1, INFINITY, False
        if k > 0 and t < prev and t <= rel_tol * abs(total):
            nxt = exp((k + 1) * alpha * lx - _lgamma(1.0 + (k + 1) * alpha))
            ratio = nxt / t
            tail = nxt / (1.0 - ratio) if ratio < 1.0 else INFINITY
            return total, k + 1, tail, True
        prev = t
    return total, max_terms, INFINITY, False
