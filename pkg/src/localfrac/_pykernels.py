"""Pure-Python kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors every
function here with the same operation order so both backends agree to a few
ulps. Arguments are assumed validated by the calling module.
"""

from __future__ import annotations

import math

import numpy as np

NAME = "python"

LANCZOS_G = 6.024680040776729583740234375
LANCZOS_G_MINUS_HALF = 5.524680040776729583740234375

# Rational Lanczos sum (g ~ 6.0247, 13 terms); denominator is x(x+1)...(x+11).
LANCZOS_NUM = (
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
)
LANCZOS_DEN = (
    0.0, 39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0,
    13339535.0, 2637558.0, 357423.0, 32670.0, 1925.0, 66.0, 1.0,
)

# (n-1)! for n = 1..23, all exactly representable.
FACTORIALS = tuple(float(math.factorial(n)) for n in range(23))


def lanczos_sum(x: float) -> float:
    num = 0.0
    den = 0.0
    if x < 5.0:
        for i in range(12, -1, -1):
            num = num * x + LANCZOS_NUM[i]
            den = den * x + LANCZOS_DEN[i]
    else:
        # ascending powers of 1/x avoid overflow for large x
        for i in range(13):
            num = num / x + LANCZOS_NUM[i]
            den = den / x + LANCZOS_DEN[i]
    return num / den


def gamma_lanczos(x: float) -> float:
    """Gamma for ``0.5 <= x <= 171.6``."""
    if x == math.floor(x) and x <= 23.0:
        return FACTORIALS[int(x) - 1]
    y = x + LANCZOS_G_MINUS_HALF
    if x > LANCZOS_G_MINUS_HALF:
        q = y - x
        z = q - LANCZOS_G_MINUS_HALF
    else:
        q = y - LANCZOS_G_MINUS_HALF
        z = q - x
    z = z * LANCZOS_G / y
    r = lanczos_sum(x) / math.exp(y)
    r += z * r
    sqrtpow = math.pow(y, x / 2.0 - 0.25)
    r *= sqrtpow
    r *= sqrtpow
    return r


def lgamma_lanczos(x: float) -> float:
    """log Gamma for ``x >= 0.5``."""
    if x == math.floor(x) and x <= 23.0:
        return math.log(FACTORIALS[int(x) - 1])
    r = math.log(lanczos_sum(x)) - LANCZOS_G
    r += (x - 0.5) * (math.log(x + LANCZOS_G - 0.5) - 1.0)
    return r


def ratio_exp(a: float, b: float) -> float:
    return math.exp(lgamma_lanczos(a) - lgamma_lanczos(b))


def _basis_lgammas(n: int, alpha: float) -> list[float]:
    # log Gamma(1 + j*alpha), j = 0..n-1; the argument expression is shared by
    # both coefficient maps so their ratios cancel exactly.
    return [lgamma_lanczos(1.0 + j * alpha) for j in range(n)]


def derivative_coeffs(coeffs: np.ndarray, alpha: float) -> np.ndarray:
    n = coeffs.shape[0]
    if n <= 1:
        return np.zeros(1)
    lg = _basis_lgammas(n, alpha)
    out = np.empty(n - 1)
    for k in range(1, n):
        out[k - 1] = coeffs[k] * math.exp(lg[k] - lg[k - 1])
    return out


def integral_coeffs(coeffs: np.ndarray, alpha: float) -> np.ndarray:
    n = coeffs.shape[0]
    lg = _basis_lgammas(n + 1, alpha)
    out = np.empty(n + 1)
    out[0] = 0.0
    for k in range(n):
        out[k + 1] = coeffs[k] * math.exp(lg[k] - lg[k + 1])
    return out


def eval_offset(coeffs: np.ndarray, alpha: float, h: float) -> float:
    # shares the vector path so scalar and array evaluation agree bit for bit
    return float(eval_offsets(coeffs, alpha, np.array([h], dtype=float))[0])


def eval_offsets(coeffs: np.ndarray, alpha: float, h: np.ndarray) -> np.ndarray:
    out = np.full(h.shape, coeffs[0], dtype=float)
    pos = h > 0.0
    n = coeffs.shape[0] - 1
    if n == 0 or not pos.any():
        return out
    p = np.exp(alpha * np.log(h[pos]))
    acc = np.full(p.shape, coeffs[n], dtype=float)
    for k in range(n - 1, -1, -1):
        acc *= p
        acc += coeffs[k]
    out[pos] = acc
    return out


def ml_series(
    alpha: float, x: float, rel_tol: float, max_terms: int
) -> tuple[float, int, float, bool]:
    """Partial sums of sum_k x^(k alpha) / Gamma(1 + k alpha).

    Returns ``(value, terms_used, tail_bound, converged)``.
    """
    if x == 0.0:
        return 1.0, 1, 0.0, True
    lx = math.log(x)
    total = 0.0
    prev = math.inf
    for k in range(max_terms):
        t = math.exp(k * alpha * lx - lgamma_lanczos(1.0 + k * alpha))
        total += t
        if not math.isfinite(total):
            return total, k + 1, math.inf, False
        if k > 0 and t < prev and t <= rel_tol * abs(total):
            nxt = math.exp((k + 1) * alpha * lx - lgamma_lanczos(1.0 + (k + 1) * alpha))
            ratio = nxt / t
            tail = nxt / (1.0 - ratio) if ratio < 1.0 else math.inf
            return total, k + 1, tail, True
        prev = t
    return total, max_terms, math.inf, False
