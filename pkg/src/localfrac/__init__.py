"""Local fractional calculus on fractal power series.

Functions are represented as finite expansions in ``(x - x0)**(k alpha)``;
on that basis the local fractional derivative and integral are exact
coefficient maps, which makes the generalized Taylor formula, its remainder
and the Mittag-Leffler function directly computable. Sample-based
estimators in :mod:`localfrac.numeric` cross-check the spectral operators.
"""

from localfrac._backend import BACKEND
from localfrac.errors import (
    ConvergenceError,
    DegenerateError,
    DegreeError,
    DomainError,
    EvaluationError,
    GammaOverflowError,
    LocalFracError,
    MeanValueNotFoundError,
    MismatchError,
    PoleError,
)
from localfrac.numeric import (
    HolderEstimate,
    QuadratureResult,
    QuotientEstimate,
    holder_exponent,
    lfd_quotient,
    lfi_quadrature,
    riemann_sum_diagnostic,
)
from localfrac.order import FractionalOrder
from localfrac.series import (
    FractalSeries,
    add,
    definite_integral,
    evaluate,
    lf_derivative,
    lf_integral,
    mul,
    scale,
    sequential_derivative,
)
from localfrac.special import (
    GammaValue,
    MittagLefflerValue,
    gamma,
    gamma_ratio,
    gamma_value,
    log_gamma,
    mittag_leffler,
)
from localfrac.taylor import (
    ConvergenceRow,
    ConvergenceTable,
    TaylorResult,
    convergence_table,
    find_theta,
    find_xi,
    mean_value_residual,
    remainder_bound,
    taylor_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConvergenceError",
    "ConvergenceRow",
    "ConvergenceTable",
    "DegenerateError",
    "DegreeError",
    "DomainError",
    "EvaluationError",
    "FractalSeries",
    "FractionalOrder",
    "GammaOverflowError",
    "GammaValue",
    "HolderEstimate",
    "LocalFracError",
    "MeanValueNotFoundError",
    "MismatchError",
    "MittagLefflerValue",
    "PoleError",
    "QuadratureResult",
    "QuotientEstimate",
    "TaylorResult",
    "add",
    "convergence_table",
    "definite_integral",
    "evaluate",
    "find_theta",
    "find_xi",
    "gamma",
    "gamma_ratio",
    "gamma_value",
    "holder_exponent",
    "lf_derivative",
    "lf_integral",
    "lfd_quotient",
    "lfi_quadrature",
    "log_gamma",
    "mean_value_residual",
    "mittag_leffler",
    "mul",
    "remainder_bound",
    "riemann_sum_diagnostic",
    "scale",
    "sequential_derivative",
    "taylor_polynomial",
]
