"""
Tests for the precision context and the numeric core.
"""
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import mpmath
import pytest

from apery_verify.errors import DomainError, UsageError
from apery_verify.models.precision import PrecisionCtx, guard_bits, required_bits
from apery_verify.services.numeric_core import bernoulli, const, elem, is_integer, rat_to_real, to_decimal_string
from conftest import as_oracle


def test_constants_match_mpmath(ctx):
    """pi, log 2 and Euler's constant agree with mpmath to 1e-60"""
    assert abs(as_oracle(const('pi', ctx)) - mpmath.pi) < mpmath.mpf(10) ** -60
    assert abs(as_oracle(const('log2', ctx)) - mpmath.log(2)) < mpmath.mpf(10) ** -60
    assert abs(as_oracle(const('euler_gamma', ctx)) - mpmath.euler) < mpmath.mpf(10) ** -60


def test_unknown_constant(ctx):
    with pytest.raises(UsageError):
        const('catalan', ctx)


@pytest.mark.parametrize('fn, x', [('sqrt', -1), ('log', 0), ('log', Fraction(-1, 2))])
def test_elementary_domain_errors(ctx, fn, x):
    with pytest.raises(DomainError):
        elem(fn, x, ctx)


def test_pow_int_needs_exponent(ctx):
    with pytest.raises(UsageError):
        elem('pow_int', 2, ctx)
    with pytest.raises(DomainError):
        elem('pow_int', 0, ctx, exponent=-1)
    assert elem('pow_int', Fraction(1, 2), ctx, exponent=3) == ctx.real(Fraction(1, 8))


def test_bernoulli_numbers():
    assert [bernoulli(n) for n in range(7)] == [
        Fraction(1), Fraction(-1, 2), Fraction(1, 6), Fraction(0), Fraction(-1, 30), Fraction(0), Fraction(1, 42),
    ]
    assert bernoulli(12) == Fraction(-691, 2730)


def test_guard_policy():
    assert guard_bits(1024) == 32 + 10
    assert required_bits(Fraction(1, 2**100)) >= 100 + 32


def test_context_rejects_insufficient_precision():
    """A 64-bit context cannot hold a 1e-30 target"""
    with pytest.raises(UsageError):
        PrecisionCtx(target_abs_err=Fraction(1, 10**30), precision_bits=64)


def test_for_tolerance_raises_precision():
    ctx = PrecisionCtx.for_tolerance(Fraction(1, 10**100), 64)
    assert ctx.precision_bits >= 333 + 32


def test_contexts_are_independent():
    low = PrecisionCtx.for_tolerance(Fraction(1, 10**6), 80)
    high = PrecisionCtx.for_tolerance(Fraction(1, 10**6), 512)
    with high.workprec(1000):
        assert low.mp.prec == 80
    assert high.mp.prec == 512


def test_context_cache_is_shared_across_threads():
    """Concurrent writers leave one consistent entry per key"""
    ctx = PrecisionCtx.for_tolerance(Fraction(1, 10**6), 80)

    def fill(i):
        return ctx.cache.put(('square', i % 8), (i % 8) ** 2)

    with ThreadPoolExecutor(max_workers=4) as pool:
        list(pool.map(fill, range(64)))
    assert ctx.cache.get(('square', 5)) == 25
    assert ctx.cache.get(('cube', 5)) is None
    assert PrecisionCtx.for_tolerance(Fraction(1, 10**6), 80).cache.get(('square', 5)) is None


def test_rational_conversion(ctx):
    assert abs(rat_to_real(Fraction(1, 3), ctx) * 3 - 1) < ctx.mp.ldexp(1, -250)
    assert rat_to_real(7, ctx) == 7
    assert is_integer(Fraction(4, 2))
    assert not is_integer(Fraction(1, 2))


def test_decimal_rendering(ctx):
    assert to_decimal_string(Fraction(1, 3), ctx) == '1/3'
    assert to_decimal_string(5, ctx) == '5'
    assert to_decimal_string(ctx.real(Fraction(1, 4)), ctx) == '0.25'
    rendered = to_decimal_string(const('pi', ctx), ctx)
    assert rendered.startswith('3.14159265358979323846264338327950288')
