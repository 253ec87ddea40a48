"""Independent reference computations.

Nothing here imports the package; values come from mpmath at 40 digits or
from elementary series written out directly.
"""

from __future__ import annotations

import math

import mpmath

mpmath.mp.dps = 40


def gamma(x: float) -> float:
    return float(mpmath.gamma(mpmath.mpf(x)))


def rgamma(x: float) -> float:
    """1 / Gamma(x)."""
    return float(mpmath.rgamma(mpmath.mpf(x)))


def gamma_ratio(a: float, b: float) -> float:
    return float(mpmath.gamma(mpmath.mpf(a)) / mpmath.gamma(mpmath.mpf(b)))


def erf_series(z: float, terms: int = 60) -> float:
    """Maclaurin series of erf, summed with fsum."""
    parts = [
        (-1) ** n * z ** (2 * n + 1) / (math.factorial(n) * (2 * n + 1)) for n in range(terms)
    ]
    return 2.0 / math.sqrt(math.pi) * math.fsum(parts)


def ml_half(z: float) -> float:
    """E_{1/2}(z) = exp(z**2) erfc(-z) with erfc = 1 + erf(z)."""
    return math.exp(z * z) * (1.0 + erf_series(z))


def power_series_value(coeffs, alpha: float, h: float) -> float:
    """sum_k c_k h**(k alpha) in 40-digit arithmetic."""
    hh = mpmath.mpf(h)
    return float(mpmath.fsum(mpmath.mpf(c) * hh ** (k * mpmath.mpf(alpha)) for k, c in enumerate(coeffs)))


def e_alpha_coeffs(alpha: float, degree: int) -> list[float]:
    return [rgamma(1 + k * alpha) for k in range(degree + 1)]


def xi_power_2alpha(alpha: float, x: float) -> float:
    """Mean-value point for f = t**(2 alpha) about 0."""
    a = mpmath.mpf(alpha)
    r = mpmath.gamma(1 + a) ** 2 / mpmath.gamma(1 + 2 * a)
    return float(x * r ** (1 / a))
