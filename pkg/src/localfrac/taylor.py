"""Generalized local fractional Taylor formula.

For a series ``f`` and expansion point ``x0`` the degree-``N`` polynomial is

    T_N(x) = sum_{k<=N} f^(k alpha)(x0) / Gamma(1 + k alpha) (x - x0)**(k alpha)

with the mean-value remainder

    f(x) - T_N(x) = f^((N+1) alpha)(xi) (x - x0)**((N+1) alpha) / Gamma(1 + (N+1) alpha)

for some ``xi`` in ``(x0, x)``. This module builds ``T_N``, bounds the
remainder over an interval, locates ``xi`` numerically and tabulates the
error as ``N`` grows.
"""

from __future__ import annotations

import csv
import io
import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from localfrac._backend import kernels
from localfrac.errors import DomainError, MeanValueNotFoundError
from localfrac.series import FractalSeries, evaluate, lf_derivative

__all__ = [
    "ConvergenceRow",
    "ConvergenceTable",
    "TaylorResult",
    "convergence_table",
    "find_theta",
    "find_xi",
    "mean_value_residual",
    "remainder_bound",
    "taylor_coefficients",
    "taylor_polynomial",
]

logger = logging.getLogger(__name__)

BOUND_GRID = 1024
SCAN_CELLS = 256
SCAN_REFINEMENTS = 3
RESIDUAL_RTOL = 1e-10
CSV_HEADER = ("N", "approx", "abs_error", "remainder_bound")


def fmt(value: float) -> str:
    """Round-trip-safe, locale-independent rendering with 17 significant digits."""
    return format(value, ".17g")


@dataclass(frozen=True)
class TaylorResult:
    polynomial: FractalSeries
    degree: int
    remainder_bound: float | None = None
    interval_end: float | None = None
    x: float | None = None
    xi: float | None = None
    theta: float | None = None


@dataclass(frozen=True)
class ConvergenceRow:
    degree: int
    approx: float
    abs_error: float
    remainder_bound: float


@dataclass(frozen=True)
class ConvergenceTable:
    rows: tuple[ConvergenceRow, ...]

    def __post_init__(self) -> None:
        degrees = [r.degree for r in self.rows]
        if any(b <= a for a, b in zip(degrees, degrees[1:])):
            raise ValueError("degrees must be strictly increasing")

    def errors(self) -> list[float]:
        return [r.abs_error for r in self.rows]

    def to_records(self) -> list[dict[str, float | int]]:
        return [
            {
                "N": r.degree,
                "approx": r.approx,
                "abs_error": r.abs_error,
                "remainder_bound": r.remainder_bound,
            }
            for r in self.rows
        ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow([r.degree, fmt(r.approx), fmt(r.abs_error), fmt(r.remainder_bound)])
        return buf.getvalue()


def _check_point(f: FractalSeries, x0: float) -> float:
    x0 = float(x0)
    if not (math.isfinite(x0) and x0 >= f.center):
        raise DomainError(f"expansion point {x0!r} lies left of the center {f.center}")
    return x0


def _remainder_factor(alpha: float, order: int, h: float) -> float:
    # h**(order alpha) / Gamma(1 + order alpha), in logs so large orders stay finite
    if h == 0.0:
        return 0.0
    return math.exp(order * alpha * math.log(h) - kernels.lgamma_lanczos(1.0 + order * alpha))


def derivative_values(f: FractalSeries, x0: float, n: int) -> list[float]:
    """``f^(k alpha)(x0)`` for ``k = 0..n``."""
    x0 = _check_point(f, x0)
    values = []
    d = f
    for _ in range(n + 1):
        values.append(evaluate(d, x0))
        d = lf_derivative(d)
    return values


def taylor_coefficients(f: FractalSeries, x0: float, n: int) -> np.ndarray:
    """``f^(k alpha)(x0) / Gamma(1 + k alpha)`` for ``k = 0..n``."""
    if n < 0:
        raise DomainError(f"degree must be >= 0, got {n}")
    a = f.alpha.alpha
    d = derivative_values(f, x0, n)
    return np.array([d[k] * math.exp(-kernels.lgamma_lanczos(1.0 + k * a)) for k in range(n + 1)])


def remainder_bound(
    f: FractalSeries, x0: float, n: int, b: float, grid: int = BOUND_GRID
) -> float:
    """Upper bound on ``|f(x) - T_n(x)|`` for ``x`` in ``[x0, b]``.

    The supremum of ``|f^((n+1) alpha)|`` over ``[x0, b]`` is taken on a
    uniform grid and refined once around the largest sample. It is exact
    when the derivative magnitude is monotone (e.g. all coefficients share
    a sign and ``x0`` is the center), otherwise a sampled estimate.
    """
    x0 = _check_point(f, x0)
    b = float(b)
    if not b > x0:
        raise DomainError(f"interval end {b!r} must exceed x0={x0!r}")
    if n < 0:
        raise DomainError(f"degree must be >= 0, got {n}")
    d = f
    for _ in range(n + 1):
        if d.degree == 0:
            return 0.0
        d = lf_derivative(d)
    d = d.canonical()
    if d.is_zero():
        return 0.0
    t = np.linspace(x0, b, grid)
    vals = np.abs(evaluate(d, t))
    i = int(np.argmax(vals))
    sup = float(vals[i])
    t_fine = np.linspace(t[max(i - 1, 0)], t[min(i + 1, grid - 1)], grid)
    sup = max(sup, float(np.max(np.abs(evaluate(d, t_fine)))))
    if sup == 0.0:
        return 0.0
    return sup * _remainder_factor(f.alpha.alpha, n + 1, b - x0)


def _leftmost_root(
    residual: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    tol: float,
) -> float:
    for level in range(SCAN_REFINEMENTS + 1):
        n = SCAN_CELLS << level
        t = lo + (hi - lo) * (np.arange(n + 1) / n)
        t[-1] = hi
        r = residual(t)
        sgn = np.sign(r)
        small = np.flatnonzero(np.abs(r[1:n]) <= tol) + 1
        crossing = np.flatnonzero(sgn[:-1] * sgn[1:] < 0)
        node = int(small[0]) if small.size else n + 1
        cell = int(crossing[0]) if crossing.size else n + 1
        if node <= cell and node <= n:
            return float(t[node])
        if cell <= n:
            return _bisect(residual, float(t[cell]), float(t[cell + 1]), float(r[cell]), tol)
    raise MeanValueNotFoundError(
        f"no sign change of the mean-value residual on ({lo}, {hi}) "
        f"after {SCAN_REFINEMENTS} grid refinements"
    )


def _bisect(
    residual: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    ra: float,
    tol: float,
) -> float:
    best_t = math.nan
    best_r = math.inf
    for _ in range(200):
        m = 0.5 * (a + b)
        if not a < m < b:
            break
        rm = float(residual(np.array([m]))[0])
        if abs(rm) < best_r:
            best_t, best_r = m, abs(rm)
        if rm == 0.0:
            break
        if (rm > 0.0) == (ra > 0.0):
            a, ra = m, rm
        else:
            b = m
    if not best_r <= tol:
        raise MeanValueNotFoundError(
            f"bisection stalled with residual {best_r:.3e} above tolerance {tol:.3e}"
        )
    return best_t


def _remainder_equation(
    f: FractalSeries, x0: float, x: float, n: int
) -> tuple[FractalSeries, float, float]:
    """``(D, factor, target)`` with residual ``D(xi) * factor - target``."""
    x0 = _check_point(f, x0)
    if not x > x0:
        raise DomainError(f"need x > x0, got x={x!r}, x0={x0!r}")
    if n == 0:
        target = evaluate(f, x) - evaluate(f, x0)
    else:
        poly = FractalSeries(f.alpha, taylor_coefficients(f, x0, n), x0, f.max_degree)
        target = evaluate(f, x) - evaluate(poly, x)
    d = f
    for _ in range(n + 1):
        d = lf_derivative(d)
    return d, _remainder_factor(f.alpha.alpha, n + 1, x - x0), target


def _mean_value_point(f: FractalSeries, x0: float, x: float, n: int) -> float:
    """Leftmost ``xi`` in ``(x0, x)`` solving the degree-``n`` remainder equation."""
    x0 = float(x0)
    x = float(x)
    d, factor, target = _remainder_equation(f, x0, x, n)
    tol = RESIDUAL_RTOL * (1.0 + abs(target))

    def residual(t: np.ndarray) -> np.ndarray:
        return evaluate(d, t) * factor - target

    return _leftmost_root(residual, x0, x, tol)


def mean_value_residual(f: FractalSeries, x0: float, x: float, xi: float, n: int = 0) -> float:
    """Residual of the degree-``n`` remainder equation at a candidate ``xi``."""
    d, factor, target = _remainder_equation(f, float(x0), float(x), n)
    return evaluate(d, float(xi)) * factor - target


def find_xi(f: FractalSeries, x0: float, x: float) -> float:
    """Mean-value point of ``f(x) - f(x0) = f^(alpha)(xi) (x-x0)**alpha / Gamma(1+alpha)``.

    Scans 256 cells (doubling up to three times) for the leftmost sign
    change of the residual and bisects it. Raises
    :class:`MeanValueNotFoundError` when no sign change exists.
    """
    return _mean_value_point(f, x0, x, 0)


def find_theta(f: FractalSeries, x: float, n: int) -> float:
    """``theta`` in (0, 1) with ``f(x) - T_n(x)`` equal to the remainder at ``theta x``."""
    if f.center != 0.0:
        raise DomainError("find_theta expects a series centered at 0")
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"need x > 0, got {x!r}")
    if n < 0:
        raise DomainError(f"degree must be >= 0, got {n}")
    xi = _mean_value_point(f, 0.0, x, n)
    theta = xi / x
    if not 0.0 < theta < 1.0:
        raise MeanValueNotFoundError(f"theta={theta!r} escaped (0, 1)")
    return theta


def taylor_polynomial(
    f: FractalSeries,
    x0: float,
    n: int,
    b: float | None = None,
    x: float | None = None,
) -> TaylorResult:
    """Degree-``n`` local fractional Taylor polynomial of ``f`` about ``x0``.

    With ``b`` the result carries a remainder bound valid on ``[x0, b]``;
    with ``x`` it also carries the mean-value point ``xi`` for that ``x``
    and ``theta = (xi - x0) / (x - x0)``. ``b`` defaults to ``x``.
    """
    x0 = _check_point(f, x0)
    if n < 0:
        raise DomainError(f"degree must be >= 0, got {n}")
    poly = FractalSeries(f.alpha, taylor_coefficients(f, x0, n), x0, f.max_degree)
    if b is None:
        b = x
    bound = remainder_bound(f, x0, n, b) if b is not None else None
    xi = theta = None
    if x is not None:
        x = float(x)
        try:
            xi = _mean_value_point(f, x0, x, n)
        except MeanValueNotFoundError as exc:
            logger.warning("no mean-value point for degree %d at x=%r: %s", n, x, exc)
        else:
            theta = (xi - x0) / (x - x0)
    return TaylorResult(
        polynomial=poly,
        degree=n,
        remainder_bound=bound,
        interval_end=None if b is None else float(b),
        x=x,
        xi=xi,
        theta=theta,
    )


def convergence_table(f: FractalSeries, x0: float, x: float, n_max: int) -> ConvergenceTable:
    """Approximation error of ``T_N(x)`` against ``f(x)`` for ``N = 0..n_max``."""
    x0 = _check_point(f, x0)
    x = float(x)
    if not x > x0:
        raise DomainError(f"need x > x0, got x={x!r}, x0={x0!r}")
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    coeffs = taylor_coefficients(f, x0, n_max)
    reference = evaluate(f, x)
    rows = []
    for n in range(n_max + 1):
        poly = FractalSeries(f.alpha, coeffs[: n + 1], x0, f.max_degree)
        approx = evaluate(poly, x)
        rows.append(
            ConvergenceRow(n, approx, abs(reference - approx), remainder_bound(f, x0, n, x))
        )
    return ConvergenceTable(tuple(rows))
