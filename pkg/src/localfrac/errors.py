"""Exception hierarchy.

Domain and validation problems derive from :class:`ValueError`; numerical
failures (non-convergence, missing mean-value point) derive from
:class:`ArithmeticError`. The CLI maps the two families to exit codes 1 and 2.
"""


class LocalFracError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LocalFracError, ValueError):
    """An argument lies outside the domain of the operation."""


class PoleError(DomainError):
    """Gamma evaluated at zero or a negative integer."""


class MismatchError(DomainError):
    """Two series with different order or center were combined."""


class DegreeError(DomainError):
    """A series exceeds the configured degree cap."""


class DegenerateError(DomainError):
    """The input admits no finite estimate (e.g. a locally constant function)."""


class EvaluationError(LocalFracError, ValueError):
    """A user-supplied callable failed or returned a non-finite value."""


class GammaOverflowError(LocalFracError, OverflowError):
    """Gamma(x) is not representable as a double; use ``log_gamma``."""


class ConvergenceError(LocalFracError, ArithmeticError):
    """An iterative procedure stopped before meeting its tolerance."""


class MeanValueNotFoundError(ConvergenceError):
    """No sign change of the mean-value residual was found on any grid."""
