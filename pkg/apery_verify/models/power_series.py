"""
Truncated even power series over the rationals, stored in the variable x^2.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from ..errors import UsageError


@dataclass(frozen=True)
class TruncSeries:
    """coeffs[j] is the exact coefficient of x^(2j) for j = 0..order"""
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if not coeffs:
            raise UsageError("a truncated series needs at least its constant coefficient")
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, order: int) -> 'TruncSeries':
        """Pad with zeros or cut to exactly order + 1 coefficients"""
        values = list(coeffs)[:order + 1]
        values += [Fraction(0)] * (order + 1 - len(values))
        return cls(tuple(values))

    @classmethod
    def one(cls, order: int) -> 'TruncSeries':
        return cls.from_coeffs([1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j]
