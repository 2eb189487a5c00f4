"""
Term sequences, decay classes and summation results.
"""
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Callable, Iterator, List, Optional

from ..errors import UsageError

Real = Any


class DecayKind(str, Enum):
    GEOMETRIC = 'geometric'
    ALGEBRAIC = 'algebraic'
    ALTERNATING = 'alternating'
    ALGEBRAIC_LOG = 'algebraic_log'
    FINITE = 'finite'


@dataclass(frozen=True)
class DecayClass:
    kind: DecayKind
    ratio_bound: Optional[Any] = None
    exponent: Optional[Any] = None
    log_power: int = 0
    last_index: Optional[int] = None

    @classmethod
    def geometric(cls, ratio_bound) -> 'DecayClass':
        if not 0 <= ratio_bound < 1:
            raise UsageError(f"geometric ratio bound must lie in [0, 1), got {ratio_bound}")
        return cls(DecayKind.GEOMETRIC, ratio_bound=ratio_bound)

    @classmethod
    def algebraic(cls, exponent) -> 'DecayClass':
        return cls(DecayKind.ALGEBRAIC, exponent=exponent)

    @classmethod
    def alternating(cls) -> 'DecayClass':
        return cls(DecayKind.ALTERNATING)

    @classmethod
    def algebraic_log(cls, exponent, log_power: int) -> 'DecayClass':
        if log_power < 0:
            raise UsageError(f"log power must be non-negative, got {log_power}")
        return cls(DecayKind.ALGEBRAIC_LOG, exponent=exponent, log_power=log_power)

    @classmethod
    def finite(cls, last_index: int) -> 'DecayClass':
        return cls(DecayKind.FINITE, last_index=last_index)


class StreamedTerms:
    """Adapts an incremental generator into a term(n) callable.

    The generator yields term(first_index), term(first_index + 1), ...; values
    are memoised so repeated or backward access stays cheap.
    """

    def __init__(self, factory: Callable[[], Iterator[Real]], first_index: int):
        self._iterator = factory()
        self._first_index = first_index
        self._values: List[Real] = []

    def __call__(self, n: int) -> Real:
        i = n - self._first_index
        if i < 0:
            raise IndexError(f"term {n} precedes the first index {self._first_index}")
        while len(self._values) <= i:
            self._values.append(next(self._iterator))
        return self._values[i]


@dataclass(frozen=True)
class TermSeq:
    """term(n) for n >= first_index, with an honest decay class.

    For the algebraic_log class the term is c(n) * e_k(n; u), where term
    gives c(n), weights gives u(m) and e_k is the strict elementary sum of
    depth decay.log_power over the weights.
    """
    term: Callable[[int], Real]
    decay: DecayClass
    first_index: int = 1
    weights: Optional[Callable[[int], Real]] = None


class SumMethod(str, Enum):
    DIRECT = 'direct'
    FINITE = 'finite'
    LEVIN_U = 'levin_u'
    CVZ = 'cvz'
    SUMMATION_BY_PARTS = 'summation_by_parts'
    QUADRATURE = 'quadrature'
    CLOSED_FORM = 'closed_form'
    PARTIAL = 'partial'


@dataclass(frozen=True)
class SumResult:
    value: Real
    est_err: Real
    terms_used: int
    method: SumMethod
    reached: bool = True
    rigorous_bound: Optional[Real] = None

    @classmethod
    def closed_form(cls, value: Real, est_err: Real = 0) -> 'SumResult':
        return cls(value=value, est_err=est_err, terms_used=0, method=SumMethod.CLOSED_FORM)

    def scaled(self, factor) -> 'SumResult':
        return replace(
            self,
            value=self.value * factor,
            est_err=self.est_err * abs(factor),
            rigorous_bound=None if self.rigorous_bound is None else self.rigorous_bound * abs(factor),
        )

    def shifted(self, offset, offset_err: Real = 0) -> 'SumResult':
        return replace(self, value=self.value + offset, est_err=self.est_err + offset_err)


def combine(value: Real, parts: List[SumResult], method: Optional[SumMethod] = None) -> SumResult:
    """A derived result whose error budget is the sum of its parts"""
    est_err = sum((p.est_err for p in parts), 0)
    return SumResult(
        value=value,
        est_err=est_err,
        terms_used=sum(p.terms_used for p in parts),
        method=method or (parts[0].method if parts else SumMethod.CLOSED_FORM),
        reached=all(p.reached for p in parts),
    )
