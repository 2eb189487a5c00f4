"""
Compositions and the {2}_r harmonic-sum table.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

from ..errors import UsageError


@dataclass(frozen=True)
class Composition:
    """A finite sequence of positive exponents (k1, ..., kr)"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for k in parts:
            if not isinstance(k, int) or isinstance(k, bool) or k < 1:
                raise UsageError(f"composition parts must be positive integers, got {parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def repeated(cls, k: int, r: int) -> 'Composition':
        """The composition {k}_r"""
        return cls((k,) * r)

    @classmethod
    def of(cls, value) -> 'Composition':
        if isinstance(value, Composition):
            return value
        if isinstance(value, int):
            return cls((value,))
        return cls(tuple(value))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def admissible(self) -> bool:
        return self.depth > 0 and self.parts[0] > 1

    def __iter__(self) -> Iterable[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class SumTable2r:
    """star_values[n][r] = zeta*_n({2}_r) and plain_values[n][r] = zeta_n({2}_r)"""
    N: int
    R: int
    star_values: Tuple[Tuple[Fraction, ...], ...]
    plain_values: Tuple[Tuple[Fraction, ...], ...]

    def star(self, n: int, r: int) -> Fraction:
        return self.star_values[n][r]

    def plain(self, n: int, r: int) -> Fraction:
        return self.plain_values[n][r]

    def column(self, r: int, star: bool = True) -> List[Fraction]:
        rows = self.star_values if star else self.plain_values
        return [row[r] for row in rows]
