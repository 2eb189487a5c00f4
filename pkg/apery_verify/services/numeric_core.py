"""
Numeric core: named constants, rational conversion, elementary functions,
Bernoulli numbers and decimal rendering.
"""
import logging
import threading
from fractions import Fraction
from math import comb
from typing import List, Optional

from ..errors import DomainError, UsageError
from ..models.precision import Number, PrecisionCtx, Real

logger = logging.getLogger('numeric-core-service')

CONSTANT_NAMES = ('pi', 'log2', 'euler_gamma')
ELEMENTARY_FUNCTIONS = ('sqrt', 'log', 'exp', 'pow_int', 'sin')

_bernoulli_numbers: List[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def const(name: str, ctx: PrecisionCtx) -> Real:
    """Return a named constant at the context precision.

    Args:
        name (str): one of 'pi', 'log2', 'euler_gamma'
        ctx (PrecisionCtx): precision context

    Returns:
        Real: the constant, correct to the context's working precision
    """
    mp = ctx.mp
    if name == 'pi':
        return +mp.pi
    if name == 'log2':
        return +mp.ln2
    if name == 'euler_gamma':
        return +mp.euler
    raise UsageError(f"Unknown constant '{name}', expected one of {', '.join(CONSTANT_NAMES)}")


def rat_to_real(q: Number, ctx: PrecisionCtx) -> Real:
    """Round an exact rational to the context precision"""
    return ctx.real(Fraction(q) if isinstance(q, int) else q)


def elem(fn: str, x: Number, ctx: PrecisionCtx, exponent: Optional[int] = None) -> Real:
    """Evaluate an elementary function with domain checks.

    Args:
        fn (str): one of 'sqrt', 'log', 'exp', 'pow_int', 'sin'
        x: argument (int, Fraction, decimal string or mpf)
        ctx (PrecisionCtx): precision context
        exponent (int, optional): integer power, required for 'pow_int'

    Returns:
        Real: the function value
    """
    mp = ctx.mp
    value = ctx.real(x)
    if fn == 'sqrt':
        if value < 0:
            raise DomainError(f"sqrt of negative argument {x}")
        return mp.sqrt(value)
    if fn == 'log':
        if value <= 0:
            raise DomainError(f"log of nonpositive argument {x}")
        return mp.log(value)
    if fn == 'exp':
        return mp.exp(value)
    if fn == 'sin':
        return mp.sin(value)
    if fn == 'pow_int':
        if exponent is None or int(exponent) != exponent:
            raise UsageError("pow_int needs an integer exponent")
        if value == 0 and exponent < 0:
            raise DomainError("zero raised to a negative power")
        return value ** int(exponent)
    raise UsageError(f"Unknown elementary function '{fn}', expected one of {', '.join(ELEMENTARY_FUNCTIONS)}")


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n with B_1 = -1/2, memoised"""
    if n < 0:
        raise UsageError(f"Bernoulli index must be non-negative, got {n}")
    with _bernoulli_lock:
        while len(_bernoulli_numbers) <= n:
            m = len(_bernoulli_numbers)
            acc = sum(comb(m + 1, k) * _bernoulli_numbers[k] for k in range(m))
            _bernoulli_numbers.append(-acc / (m + 1))
        return _bernoulli_numbers[n]


def is_integer(value: Number) -> bool:
    if isinstance(value, (int, Fraction)):
        return Fraction(value).denominator == 1
    try:
        return int(value) == value
    except (TypeError, ValueError, OverflowError):
        return False


def to_decimal_string(value, ctx: PrecisionCtx) -> str:
    """Render a Real (or exact rational) with the full digits of the context"""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
    if isinstance(value, int):
        return str(value)
    return ctx.mp.nstr(ctx.real(value), ctx.digits())
