"""
Precision context consumed by every numeric routine.

A PrecisionCtx owns a private mpmath context, so two contexts never share
mutable precision state and evaluations stay reentrant across threads.
"""
import math
import threading
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Hashable, Optional, Union

import mpmath

from ..errors import UsageError

DEFAULT_PRECISION_BITS = 256
DEFAULT_TARGET_ABS_ERR = Fraction(1, 10**30)
DEFAULT_MAX_TERMS = 20000
DEFAULT_GEOMETRIC_MAX_TERMS = 10**6
DEFAULT_EXACT_SWITCHOVER = 2000
MIN_PRECISION_BITS = 64
GUARD_BITS = 32

Real = Any  # an mpf bound to some PrecisionCtx.mp
Rat = Fraction
Number = Union[int, Fraction, float, str, Any]


def guard_bits(n_terms: int) -> int:
    """Extra bits for an n-term summation: 32 + ceil(log2 N)"""
    return GUARD_BITS + max(1, math.ceil(math.log2(max(n_terms, 2))))


def required_bits(target_abs_err: Number) -> int:
    """Smallest precision satisfying the guard invariant for a target error"""
    if isinstance(target_abs_err, (int, float, Fraction)):
        target = Fraction(target_abs_err)
    else:
        target = Fraction(str(target_abs_err))
    if target <= 0:
        raise UsageError(f"target_abs_err must be positive, got {target_abs_err}")
    # -log2(p/q) = log2(q) - log2(p), exact enough through bit lengths
    return max(0, target.denominator.bit_length() - target.numerator.bit_length() + 1) + GUARD_BITS


class ZetaCache:
    """Integer zeta values keyed by (m, precision) so hits equal misses bit for bit"""

    def __init__(self):
        self.values: Dict[tuple, Real] = {}
        self._lock = threading.Lock()

    def get(self, m: int, prec: int) -> Optional[Real]:
        with self._lock:
            return self.values.get((m, prec))

    def put(self, m: int, prec: int, value: Real) -> Real:
        with self._lock:
            return self.values.setdefault((m, prec), value)


class ContextCache:
    """Derived data (coefficient lists, expansions, quadrature rules) keyed per precision"""

    def __init__(self):
        self.values: Dict[Hashable, Any] = {}
        self._lock = threading.Lock()

    def get(self, key: Hashable) -> Any:
        with self._lock:
            return self.values.get(key)

    def put(self, key: Hashable, value: Any) -> Any:
        with self._lock:
            self.values[key] = value
            return value


@dataclass(frozen=True)
class PrecisionCtx:
    target_abs_err: Number = DEFAULT_TARGET_ABS_ERR
    precision_bits: int = DEFAULT_PRECISION_BITS
    max_terms: int = DEFAULT_MAX_TERMS
    geometric_max_terms: int = DEFAULT_GEOMETRIC_MAX_TERMS
    exact_switchover: int = DEFAULT_EXACT_SWITCHOVER
    mp: Any = field(init=False, repr=False, compare=False)
    zeta_cache: ZetaCache = field(init=False, repr=False, compare=False)
    cache: ContextCache = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.precision_bits < MIN_PRECISION_BITS:
            raise UsageError(f"precision_bits must be at least {MIN_PRECISION_BITS}, got {self.precision_bits}")
        if self.max_terms < 1 or self.geometric_max_terms < 1:
            raise UsageError("max_terms must be positive")
        needed = required_bits(self.target_abs_err)
        if self.precision_bits < needed:
            raise UsageError(
                f"precision_bits={self.precision_bits} is too small for target "
                f"{self.target_abs_err} (need at least {needed})"
            )
        mp = mpmath.MPContext()
        mp.prec = self.precision_bits
        object.__setattr__(self, 'mp', mp)
        object.__setattr__(self, 'zeta_cache', ZetaCache())
        object.__setattr__(self, 'cache', ContextCache())
        object.__setattr__(self, 'target_abs_err', self.real(self.target_abs_err))

    @classmethod
    def for_tolerance(cls, target_abs_err: Number, precision_bits: int = DEFAULT_PRECISION_BITS, **kwargs) -> 'PrecisionCtx':
        """Build a context, raising precision_bits when the target demands it"""
        bits = max(precision_bits, required_bits(target_abs_err))
        return cls(target_abs_err=target_abs_err, precision_bits=bits, **kwargs)

    @property
    def eps(self) -> Real:
        return self.target_abs_err

    def real(self, x: Number) -> Real:
        """Convert an int, Fraction, decimal string or mpf into this context"""
        mp = self.mp
        if isinstance(x, Fraction):
            return mp.mpf(x.numerator) / x.denominator
        if isinstance(x, str):
            return mp.mpf(x)
        return mp.mpf(x)

    @contextmanager
    def workprec(self, n_terms: Optional[int] = None):
        """Raise the working precision by the guard policy for an n-term sum"""
        with self.mp.workprec(self.precision_bits + guard_bits(n_terms or self.max_terms)):
            yield self.mp

    def digits(self) -> int:
        return int(math.ceil(self.precision_bits * math.log10(2)))
