"""
Special functions against mpmath's own implementations.
"""
import random
from fractions import Fraction
from math import factorial

import mpmath
import pytest

from apery_verify.errors import DomainError, UsageError
from apery_verify.services.special_functions import (
    digamma, log_gamma, mpl_2r, mpl_2r_remainder, polylog, zeta_2r, zeta_2r_newton, zeta_int, zeta_nonpositive,
    zeta_star_2r,
)
from conftest import as_oracle

TIGHT = mpmath.mpf(10) ** -30


@pytest.mark.parametrize('m', range(2, 10))
def test_zeta_int(ctx, m):
    assert abs(as_oracle(zeta_int(m, ctx)) - mpmath.zeta(m)) < TIGHT


@pytest.mark.parametrize('m, expected', [
    (2, '1.6449340668482264364724151666460251892189499012067984377356'),
    (3, '1.2020569031595942853997381615114499907649862923404988817922'),
])
def test_zeta_int_reference_digits(ctx, m, expected):
    assert abs(as_oracle(zeta_int(m, ctx)) - mpmath.mpf(expected)) < TIGHT


def test_polylog_negative_branch_reference(ctx):
    """Li_3(-9/10) from the alternating branch"""
    value = as_oracle(polylog(3, Fraction(-9, 10), ctx))
    assert abs(value - mpmath.mpf('-0.8186382015')) < mpmath.mpf(10) ** -9
    assert abs(value - mpmath.polylog(3, mpmath.mpf(-9) / 10)) < TIGHT


def test_zeta_int_is_cached(ctx):
    assert zeta_int(5, ctx) is zeta_int(5, ctx)


def test_zeta_int_domain(ctx):
    with pytest.raises(DomainError):
        zeta_int(1, ctx)


def test_zeta_nonpositive():
    assert zeta_nonpositive(0) == Fraction(-1, 2)
    assert zeta_nonpositive(1) == Fraction(-1, 12)
    assert zeta_nonpositive(2) == 0


@pytest.mark.parametrize('s', [Fraction(1, 10), Fraction(1, 2), 1, Fraction(7, 3), 25])
def test_digamma_values(ctx, s):
    assert abs(as_oracle(digamma(s, ctx)) - mpmath.psi(0, as_oracle(Fraction(s)))) < TIGHT


def test_digamma_recurrence_and_duplication(ctx):
    """psi(s+1) = psi(s) + 1/s and psi(s) = 2 psi(2s) - psi(s+1/2) - 2 log 2 on random rationals"""
    rng = random.Random(20240611)
    mp = ctx.mp
    for _ in range(100):
        s = Fraction(rng.randint(1, 500), rng.randint(1, 60))
        value = digamma(s, ctx)
        assert abs(digamma(s + 1, ctx) - value - ctx.real(1 / s)) < mp.mpf(10) ** -30
        doubled = 2 * digamma(2 * s, ctx) - digamma(s + Fraction(1, 2), ctx) - 2 * mp.ln2
        assert abs(doubled - value) < mp.mpf(10) ** -30


def test_digamma_domain(ctx):
    with pytest.raises(DomainError):
        digamma(0, ctx)
    with pytest.raises(DomainError):
        log_gamma(-1, ctx)


@pytest.mark.parametrize('p', [1, 2, 3, 5, 7])
@pytest.mark.parametrize('x', ['-1', '-0.7', '-0.3', '0.2', '0.6', '0.9', '0.97'])
def test_polylog(ctx, p, x):
    assert abs(as_oracle(polylog(p, x, ctx)) - mpmath.polylog(p, mpmath.mpf(x))) < TIGHT


@pytest.mark.parametrize('r', [1, 2, 3])
def test_polylog_at_minus_one(ctx, r):
    """Li_{2r+1}(-1) = -(1 - 4^-r) zeta(2r+1)"""
    expected = -ctx.real(1 - Fraction(1, 4 ** r)) * zeta_int(2 * r + 1, ctx)
    assert abs(polylog(2 * r + 1, -1, ctx) - expected) < ctx.mp.mpf(10) ** -25


def test_polylog_domain(ctx):
    with pytest.raises(DomainError):
        polylog(1, 1, ctx)
    with pytest.raises(DomainError):
        polylog(2, Fraction(3, 2), ctx)
    with pytest.raises(DomainError):
        polylog(0, Fraction(1, 2), ctx)
    assert polylog(3, 1, ctx) == zeta_int(3, ctx)


@pytest.mark.parametrize('r', range(0, 6))
def test_zeta_twos(ctx, r):
    expected = mpmath.pi ** (2 * r) / factorial(2 * r + 1)
    assert abs(as_oracle(zeta_2r(r, ctx)) - expected) < TIGHT
    assert abs(as_oracle(zeta_2r_newton(r, ctx)) - expected) < TIGHT


def test_zeta_star_twos(ctx):
    assert abs(as_oracle(zeta_star_2r(1, ctx)) - mpmath.zeta(2)) < TIGHT
    assert abs(as_oracle(zeta_star_2r(2, ctx)) - 7 * mpmath.pi ** 4 / 360) < TIGHT


def brute_mpl(r, x, terms=400):
    """sum_n zeta_{n-1}({2}_{r-1}) x^n / n^2 in the global context"""
    x = mpmath.mpf(x)
    inner = [mpmath.mpf(1)] + [mpmath.mpf(0)] * r
    total = mpmath.mpf(0)
    for n in range(1, terms + 1):
        total += inner[r - 1] * x ** n / n ** 2
        for j in range(r, 0, -1):
            inner[j] += inner[j - 1] / n ** 2
    return total


@pytest.mark.parametrize('r', [1, 2, 3])
@pytest.mark.parametrize('x', ['0.25', '0.5', '0.8'])
def test_multiple_polylog(ctx, r, x):
    assert abs(as_oracle(mpl_2r(r, x, ctx)) - brute_mpl(r, x)) < TIGHT


@pytest.mark.parametrize('r', [2, 3])
def test_multiple_polylog_split_remainder(ctx, r):
    """The asymptotic split stops once its first omitted term is below the target"""
    assert mpl_2r_remainder(r, ctx) < ctx.eps
    assert mpl_2r_remainder(1, ctx) == 0
    assert abs(as_oracle(mpl_2r(r, '0.97', ctx)) - brute_mpl(r, '0.97', terms=3000)) < TIGHT


def test_multiple_polylog_depth_one(ctx):
    assert abs(mpl_2r(1, Fraction(9, 10), ctx) - polylog(2, Fraction(9, 10), ctx)) < ctx.mp.mpf(10) ** -30


@pytest.mark.parametrize('r', [1, 2, 3])
def test_multiple_polylog_at_one(ctx, r):
    """Li_{{2}_r}(1) = zeta({2}_r)"""
    assert abs(mpl_2r(r, 1, ctx) - zeta_2r(r, ctx)) < ctx.mp.mpf(10) ** -25


def test_multiple_polylog_domain(ctx):
    with pytest.raises(UsageError):
        mpl_2r(0, Fraction(1, 2), ctx)
    with pytest.raises(DomainError):
        mpl_2r(2, Fraction(3, 2), ctx)
