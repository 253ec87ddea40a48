"""Sample-based realizations of the defining limits.

These work on arbitrary callables rather than series and serve as an
independent cross-check of the spectral operators in :mod:`localfrac.series`.

The integral is given kernel semantics,

    I f = 1/Gamma(alpha) * int_a^b (b - t)**(alpha - 1) f(t) dt,

which agrees with the power rule on every basis function. The literal
Riemann sum with ``(dt)**alpha`` weights grows like ``N**(1 - alpha)`` on
uniform partitions; :func:`riemann_sum_diagnostic` exposes it for inspection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from localfrac.errors import DegenerateError, DomainError, EvaluationError
from localfrac.order import FractionalOrder
from localfrac.special import gamma

__all__ = [
    "HolderEstimate",
    "QuadratureResult",
    "QuotientEstimate",
    "holder_exponent",
    "lfd_quotient",
    "lfi_quadrature",
    "riemann_sum_diagnostic",
]

Func = Callable[..., object]

CONVERGENCE_RTOL = 1e-4


@dataclass(frozen=True)
class QuotientEstimate:
    value: float
    h_values: tuple[float, ...]
    quotients: tuple[float, ...]
    stability: float


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    nodes: int
    error_estimate: float
    converged: bool


@dataclass(frozen=True)
class HolderEstimate:
    exponent: float
    r_squared: float
    window: tuple[float, float]


def sample(f: Func, points: np.ndarray) -> np.ndarray:
    """Evaluate ``f`` on ``points``, vectorized when ``f`` allows it.

    Raises :class:`EvaluationError` if ``f`` fails or yields non-finite values.
    """
    out = None
    try:
        with np.errstate(all="ignore"):
            res = np.asarray(f(points), dtype=float)
        if res.shape == points.shape:
            out = res
        elif res.ndim == 0:
            out = np.full(points.shape, float(res))
    except Exception:  # noqa: BLE001 - fall back to pointwise calls below
        out = None
    if out is None:
        vals = []
        for p in points:
            try:
                vals.append(float(f(float(p))))  # type: ignore[arg-type]
            except Exception as exc:
                raise EvaluationError(f"callable failed at t={float(p)!r}: {exc}") from exc
        out = np.array(vals)
    bad = ~np.isfinite(out)
    if bad.any():
        t = float(points[np.argmax(bad)])
        raise EvaluationError(f"callable returned a non-finite value at t={t!r}")
    return out


def lfd_quotient(
    f: Func,
    x0: float,
    alpha: FractionalOrder | float,
    h0: float = 1e-2,
    levels: int = 20,
) -> QuotientEstimate:
    """Forward difference quotients ``Gamma(1+alpha) (f(x0+h) - f(x0)) / h**alpha``.

    Uses ``h_j = h0 / 2**j``. The last quotient is the estimate; no
    extrapolation is applied, so oscillating sequences stay visible in
    ``quotients`` and ``stability``.
    """
    a = FractionalOrder.of(alpha).alpha
    if not h0 > 0.0:
        raise DomainError(f"h0 must be positive, got {h0!r}")
    if levels < 3:
        raise DomainError(f"levels must be at least 3, got {levels}")
    x0 = float(x0)
    h = h0 * np.exp2(-np.arange(levels, dtype=float))
    vals = sample(f, np.concatenate(([x0], x0 + h)))
    q = gamma(1.0 + a) * (vals[1:] - vals[0]) / h**a
    last = q[-3:]
    return QuotientEstimate(
        value=float(q[-1]),
        h_values=tuple(float(v) for v in h),
        quotients=tuple(float(v) for v in q),
        stability=float(last.max() - last.min()),
    )


def _midpoint(f: Func, a: float, b: float, alpha: float, panels: int) -> float:
    top = (b - a) ** alpha
    u = (np.arange(panels) + 0.5) * (top / panels)
    t = b - u ** (1.0 / alpha)
    # rounding can push the last node a hair below a
    np.maximum(t, a, out=t)
    return math.fsum(sample(f, t)) * (top / panels)


def lfi_quadrature(
    f: Func,
    a: float,
    b: float,
    alpha: FractionalOrder | float,
    panels: int = 4096,
) -> QuadratureResult:
    """Integral of order ``alpha`` of ``f`` over ``[a, b]``.

    Substitutes ``u = (b - t)**alpha`` so that the weakly singular kernel
    becomes ``1/Gamma(1+alpha) * int_0^{(b-a)**alpha} f(b - u**(1/alpha)) du``,
    then applies the composite midpoint rule with ``panels`` and
    ``2 * panels`` cells. The finer sum is returned; the difference of the
    two is the error estimate.
    """
    order = FractionalOrder.of(alpha)
    al = order.alpha
    a = float(a)
    b = float(b)
    if not b > a:
        raise DomainError(f"need b > a, got a={a!r}, b={b!r}")
    if panels < 2:
        raise DomainError(f"panels must be at least 2, got {panels}")
    norm = 1.0 / gamma(1.0 + al)
    coarse = norm * _midpoint(f, a, b, al, panels)
    fine = norm * _midpoint(f, a, b, al, 2 * panels)
    err = abs(fine - coarse)
    return QuadratureResult(
        value=fine,
        nodes=2 * panels,
        error_estimate=err,
        converged=err <= CONVERGENCE_RTOL * abs(fine),
    )


def holder_exponent(
    f: Func,
    x0: float,
    delta_min: float = 1e-6,
    delta_max: float = 1e-2,
    samples: int = 32,
) -> HolderEstimate:
    """Least-squares slope of ``log|f(x0+d) - f(x0)|`` against ``log d``.

    Offsets ``d`` are geometrically spaced in ``[delta_min, delta_max]``.
    Samples with ``f(x0+d) == f(x0)`` are dropped; if more than half are
    dropped the function is treated as locally constant.
    """
    if not 0.0 < delta_min < delta_max:
        raise DomainError("need 0 < delta_min < delta_max")
    if samples < 8:
        raise DomainError(f"samples must be at least 8, got {samples}")
    x0 = float(x0)
    d = np.geomspace(delta_min, delta_max, samples)
    vals = sample(f, np.concatenate(([x0], x0 + d)))
    diff = np.abs(vals[1:] - vals[0])
    keep = diff > 0.0
    if 2 * int(np.count_nonzero(~keep)) > samples:
        raise DegenerateError("f(x0 + d) == f(x0) for most offsets; no finite exponent")
    lx = np.log(d[keep])
    ly = np.log(diff[keep])
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 - float(np.sum(resid**2)) / ss_tot if ss_tot > 0.0 else 1.0
    return HolderEstimate(float(slope), r2, (float(delta_min), float(delta_max)))


def riemann_sum_diagnostic(
    f: Func,
    a: float,
    b: float,
    alpha: FractionalOrder | float,
    partition_sizes: Sequence[int],
) -> list[tuple[int, float]]:
    """Left-point sums ``1/Gamma(1+alpha) * sum_j f(t_j) (dt_j)**alpha``.

    Uniform partitions of ``[a, b]``. For ``alpha < 1`` and ``f = 1`` these
    grow like ``N**(1 - alpha)`` instead of converging.
    """
    al = FractionalOrder.of(alpha).alpha
    a = float(a)
    b = float(b)
    if not b > a:
        raise DomainError(f"need b > a, got a={a!r}, b={b!r}")
    sizes = [int(n) for n in partition_sizes]
    if not sizes or any(n < 1 for n in sizes):
        raise DomainError("partition sizes must be positive")
    if any(m <= n for n, m in zip(sizes, sizes[1:])):
        raise DomainError("partition sizes must be increasing")
    norm = 1.0 / gamma(1.0 + al)
    out = []
    for n in sizes:
        width = (b - a) / n
        t = a + width * np.arange(n)
        out.append((n, norm * math.fsum(sample(f, t)) * width**al))
    return out
