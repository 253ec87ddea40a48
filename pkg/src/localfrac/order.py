from __future__ import annotations

import math
from dataclasses import dataclass

from localfrac.errors import DomainError


@dataclass(frozen=True)
class FractionalOrder:
    """An order ``alpha`` in the half-open interval (0, 1]."""

    alpha: float

    def __post_init__(self) -> None:
        a = self.alpha
        if isinstance(a, bool) or not isinstance(a, (int, float)):
            raise DomainError(f"order must be a real number, got {a!r}")
        a = float(a)
        if not math.isfinite(a) or not 0.0 < a <= 1.0:
            raise DomainError(f"order must satisfy 0 < alpha <= 1, got {a!r}")
        object.__setattr__(self, "alpha", a)

    @classmethod
    def of(cls, value: FractionalOrder | float) -> FractionalOrder:
        if isinstance(value, FractionalOrder):
            return value
        return cls(value)

    def __float__(self) -> float:
        return self.alpha

    def __str__(self) -> str:
        return repr(self.alpha)
