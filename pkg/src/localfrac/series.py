"""Finite fractal power series and the local fractional operators on them.

A :class:`FractalSeries` stores ``c_0..c_N`` for

    f(x) = sum_k c_k (x - x0)**(k alpha),      x >= x0,

so that ``c_k = f^(k alpha)(x0) / Gamma(1 + k alpha)``. On this basis the local
fractional derivative and integral act as exact coefficient shifts:

    D (x - x0)**(k alpha) = Gamma(1 + k alpha) / Gamma(1 + (k-1) alpha) (x - x0)**((k-1) alpha)
    I (x - x0)**(k alpha) = Gamma(1 + k alpha) / Gamma(1 + (k+1) alpha) (x - x0)**((k+1) alpha)

with the integral taken from the center. Series are immutable.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from localfrac._backend import kernels
from localfrac.errors import DegreeError, DomainError, MismatchError
from localfrac.order import FractionalOrder
from localfrac.special import log_gamma

__all__ = [
    "DEFAULT_MAX_DEGREE",
    "FractalSeries",
    "add",
    "definite_integral",
    "evaluate",
    "lf_derivative",
    "lf_integral",
    "mul",
    "scale",
    "sequential_derivative",
]

DEFAULT_MAX_DEGREE = 512
EQ_RTOL = 1e-12
EQ_ATOL = 1e-300


@dataclass(frozen=True, eq=False)
class FractalSeries:
    """Coefficients of ``sum_k c_k (x - center)**(k alpha)``.

    >>> s = FractalSeries(0.5, [1.0, 1.0])
    >>> s(4.0)
    3.0
    """

    alpha: FractionalOrder
    coeffs: np.ndarray
    center: float = 0.0
    max_degree: int = field(default=DEFAULT_MAX_DEGREE, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", FractionalOrder.of(self.alpha))
        center = float(self.center)
        if not math.isfinite(center):
            raise DomainError(f"center must be finite, got {center!r}")
        object.__setattr__(self, "center", center)
        c = np.array(self.coeffs, dtype=float, copy=True).reshape(-1)
        if c.size == 0:
            c = np.zeros(1)
        if not np.all(np.isfinite(c)):
            raise DomainError("coefficients must be finite")
        if c.size - 1 > self.max_degree:
            raise DegreeError(f"degree {c.size - 1} exceeds the cap {self.max_degree}")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, alpha: FractionalOrder | float, center: float = 0.0) -> FractalSeries:
        return cls(alpha, [0.0], center)

    @classmethod
    def constant(
        cls, alpha: FractionalOrder | float, value: float, center: float = 0.0
    ) -> FractalSeries:
        return cls(alpha, [value], center)

    @classmethod
    def basis(
        cls, alpha: FractionalOrder | float, k: int, center: float = 0.0
    ) -> FractalSeries:
        """The single basis function ``(x - center)**(k alpha)``."""
        c = np.zeros(k + 1)
        c[k] = 1.0
        return cls(alpha, c, center)

    @classmethod
    def e_alpha(
        cls, alpha: FractionalOrder | float, degree: int, center: float = 0.0
    ) -> FractalSeries:
        """Degree-``degree`` truncation of the Mittag-Leffler series ``E_alpha``."""
        a = FractionalOrder.of(alpha).alpha
        c = [math.exp(-log_gamma(1.0 + k * a)) for k in range(degree + 1)]
        return cls(a, c, center)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    def canonical(self) -> FractalSeries:
        """Copy with trailing zero coefficients removed."""
        nz = np.flatnonzero(self.coeffs)
        n = int(nz[-1]) + 1 if nz.size else 1
        if n == self.coeffs.shape[0]:
            return self
        return self._like(self.coeffs[:n])

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def _like(self, coeffs: Any) -> FractalSeries:
        return FractalSeries(self.alpha, coeffs, self.center, self.max_degree)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FractalSeries):
            return NotImplemented
        if self.alpha != other.alpha or self.center != other.center:
            return False
        a = self.canonical().coeffs
        b = other.canonical().coeffs
        if a.shape != b.shape:
            return False
        tol = np.maximum(EQ_RTOL * np.maximum(np.abs(a), np.abs(b)), EQ_ATOL)
        return bool(np.all(np.abs(a - b) <= tol))

    __hash__ = None  # type: ignore[assignment]

    # -- evaluation and arithmetic sugar -----------------------------------

    def __call__(self, x: Any) -> Any:
        return evaluate(self, x)

    def __add__(self, other: FractalSeries) -> FractalSeries:
        return add(self, other)

    def __sub__(self, other: FractalSeries) -> FractalSeries:
        return add(self, scale(other, -1.0))

    def __neg__(self) -> FractalSeries:
        return scale(self, -1.0)

    def __mul__(self, other: FractalSeries | float) -> FractalSeries:
        if isinstance(other, FractalSeries):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        return {
            "alpha": self.alpha.alpha,
            "center": self.center,
            "coeffs": [float(c) for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> FractalSeries:
        if not isinstance(data, dict):
            raise DomainError("series JSON must be an object")
        unknown = set(data) - {"alpha", "center", "coeffs"}
        if unknown:
            raise DomainError(f"unknown series fields: {sorted(unknown)}")
        try:
            alpha = data["alpha"]
            coeffs = data["coeffs"]
        except KeyError as exc:
            raise DomainError(f"series JSON is missing {exc.args[0]!r}") from None
        if not isinstance(coeffs, list) or not all(
            isinstance(c, (int, float)) and not isinstance(c, bool) for c in coeffs
        ):
            raise DomainError("'coeffs' must be a list of numbers")
        center = data.get("center", 0.0)
        if isinstance(center, bool) or not isinstance(center, (int, float)):
            raise DomainError("'center' must be a number")
        return cls(alpha, coeffs, center)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> FractalSeries:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid series JSON: {exc}") from None
        return cls.from_dict(data)

    @classmethod
    def load(cls, path: str | os.PathLike[str]) -> FractalSeries:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())

    def dump(self, path: str | os.PathLike[str]) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())
            fh.write("\n")


def _offsets(s: FractalSeries, x: Any) -> Any:
    h = np.asarray(x, dtype=float) - s.center
    if np.any(np.isnan(h)) or np.any(h < 0.0):
        raise DomainError(f"series centered at {s.center} is defined only for x >= center")
    return h


def evaluate(s: FractalSeries, x: Any) -> Any:
    """Value of ``s`` at ``x`` (scalar or array); ``0**0`` counts as 1."""
    h = _offsets(s, x)
    if h.ndim == 0:
        return float(kernels.eval_offset(s.coeffs, s.alpha.alpha, float(h)))
    flat = np.ascontiguousarray(h.reshape(-1))
    return np.asarray(kernels.eval_offsets(s.coeffs, s.alpha.alpha, flat)).reshape(h.shape)


def lf_derivative(s: FractalSeries) -> FractalSeries:
    """Local fractional derivative of order ``alpha``; constants vanish."""
    return s._like(kernels.derivative_coeffs(s.coeffs, s.alpha.alpha))


def lf_integral(s: FractalSeries) -> FractalSeries:
    """Local fractional integral of order ``alpha`` from the center."""
    if s.degree + 1 > s.max_degree:
        raise DegreeError(f"integral would exceed the degree cap {s.max_degree}")
    return s._like(kernels.integral_coeffs(s.coeffs, s.alpha.alpha))


def sequential_derivative(s: FractalSeries, k: int) -> FractalSeries:
    """``k``-fold application of :func:`lf_derivative`."""
    if k < 0:
        raise DomainError(f"derivative count must be >= 0, got {k}")
    out = s
    for _ in range(k):
        if out.degree == 0:
            return out._like([0.0])
        out = lf_derivative(out)
    return out


def definite_integral(s: FractalSeries, a: float, b: float) -> float:
    """Integral of order ``alpha`` of ``s`` over ``[a, b]`` as ``g(b) - g(a)``.

    ``g`` is the antiderivative :func:`lf_integral`; the result is exactly 0
    for ``a == b`` and exactly antisymmetric in ``(a, b)``.
    """
    g = lf_integral(s)
    return evaluate(g, b) - evaluate(g, a)


def _check_compatible(s1: FractalSeries, s2: FractalSeries) -> None:
    if s1.alpha != s2.alpha:
        raise MismatchError(f"order mismatch: {s1.alpha} vs {s2.alpha}")
    if s1.center != s2.center:
        raise MismatchError(f"center mismatch: {s1.center} vs {s2.center}")


def add(s1: FractalSeries, s2: FractalSeries) -> FractalSeries:
    _check_compatible(s1, s2)
    n = max(s1.coeffs.shape[0], s2.coeffs.shape[0])
    c = np.zeros(n)
    c[: s1.coeffs.shape[0]] += s1.coeffs
    c[: s2.coeffs.shape[0]] += s2.coeffs
    return s1._like(c)


def scale(s: FractalSeries, factor: float) -> FractalSeries:
    return s._like(float(factor) * s.coeffs)


def mul(s1: FractalSeries, s2: FractalSeries) -> FractalSeries:
    """Cauchy product; uses ``(x-x0)**(j alpha) (x-x0)**(k alpha) = (x-x0)**((j+k) alpha)``."""
    _check_compatible(s1, s2)
    return s1._like(np.convolve(s1.coeffs, s2.coeffs))

