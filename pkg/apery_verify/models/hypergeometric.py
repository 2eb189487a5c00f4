"""
Parameters of a generalized hypergeometric series pFq.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Tuple

from ..errors import DomainError


def is_nonpositive_integer(value: Any) -> bool:
    if isinstance(value, (int, Fraction)):
        return Fraction(value).denominator == 1 and value <= 0
    try:
        return value <= 0 and int(value) == value
    except (TypeError, ValueError, OverflowError):
        return False


@dataclass(frozen=True)
class HypParams:
    upper: Tuple[Any, ...]
    lower: Tuple[Any, ...]
    argument: Any

    def __post_init__(self):
        object.__setattr__(self, 'upper', tuple(self.upper))
        object.__setattr__(self, 'lower', tuple(self.lower))
        for b in self.lower:
            if is_nonpositive_integer(b):
                raise DomainError(f"lower parameter {b} is a nonpositive integer")

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    @property
    def convergence_margin(self):
        """s = sum(lower) - sum(upper), which governs the unit-argument decay"""
        return sum(self.lower) - sum(self.upper)

    def terminating_order(self) -> Optional[int]:
        """Degree of the polynomial when some upper parameter is a nonpositive integer"""
        orders = [-int(a) for a in self.upper if is_nonpositive_integer(a)]
        return min(orders) if orders else None
