"""
Hypergeometric evaluation, closed forms and the parametric identities.
"""
from fractions import Fraction

import mpmath
import pytest

from apery_verify.errors import DomainError, UsageError
from apery_verify.models.hypergeometric import HypParams
from apery_verify.models.series import SumMethod
from apery_verify.services.hypergeometric import (
    as_param, closed_3f2_x, cot_closed_form, eq43_series, functional_3f2, gauss_2f1_unit, hurwitz_param_apery,
    hyp_eval, param_apery, pf_3f2, quad_transform_check, single_sided_3f2, t_harmonic_apery,
)
from apery_verify.services.series_engine import apery_series
from conftest import as_oracle

TIGHT = mpmath.mpf(10) ** -25
LOOSE = mpmath.mpf(10) ** -10
LOG_WEIGHTED = mpmath.mpf(10) ** -6
AB_SAMPLES = [(1, 1), (1, Fraction(3, 2)), (Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 3), Fraction(2, 3))]


def oracle_3f2(upper, lower, z):
    return mpmath.hyp3f2(*(as_oracle(Fraction(v)) for v in upper), *(as_oracle(Fraction(v)) for v in lower), as_oracle(Fraction(z)))


def test_parameters_are_exact():
    assert as_param('0.3') == Fraction(3, 10)
    assert as_param(0.25) == Fraction(1, 4)
    assert as_param(2) == Fraction(2)
    with pytest.raises(UsageError):
        as_param(True)


def test_geometric_argument(ctx):
    """2F1(1,1; 2; 1/2) = 2 log 2"""
    result = hyp_eval(HypParams((1, 1), (2,), Fraction(1, 2)), ctx)
    assert abs(as_oracle(result.value) - 2 * mpmath.log(2)) < TIGHT


def test_terminating_series(ctx):
    result = hyp_eval(HypParams((-3, 2), (5,), 1), ctx)
    assert result.method == SumMethod.FINITE
    assert abs(result.value - ctx.real(Fraction(2, 7))) < ctx.mp.mpf(10) ** -60


def test_alternating_argument(ctx):
    """2F1(1,1; 2; -1) = log 2"""
    result = hyp_eval(HypParams((1, 1), (2,), -1), ctx)
    assert abs(as_oracle(result.value) - mpmath.log(2)) < TIGHT


@pytest.mark.parametrize('x', [Fraction(1, 10), Fraction(1, 4), Fraction(2, 5)])
def test_unit_argument_matches_digamma_closed_form(fast_ctx, x):
    result = hyp_eval(HypParams((1, 1, Fraction(3, 2)), (2 - x, 2 + x), 1), fast_ctx)
    assert abs(as_oracle(result.value) - as_oracle(closed_3f2_x(x, fast_ctx))) < LOOSE
    assert abs(as_oracle(result.value) - oracle_3f2((1, 1, Fraction(3, 2)), (2 - x, 2 + x), 1)) < LOOSE


def test_divergent_and_unsupported_arguments(ctx):
    with pytest.raises(DomainError):
        hyp_eval(HypParams((1, 1), (1,), 1), ctx)
    with pytest.raises(DomainError):
        hyp_eval(HypParams((1, 1), (2,), 2), ctx)
    with pytest.raises(DomainError):
        hyp_eval(HypParams((1,), (2,), 1), ctx)
    with pytest.raises(DomainError):
        HypParams((1, 1), (-2,), Fraction(1, 2))


def test_closed_form(ctx):
    assert abs(as_oracle(closed_3f2_x(0, ctx)) - oracle_3f2((1, 1, Fraction(3, 2)), (2, 2), 1)) < TIGHT
    with pytest.raises(DomainError):
        closed_3f2_x(1, ctx)


@pytest.mark.parametrize('x', [0, Fraction(1, 3), Fraction(2, 5)])
@pytest.mark.parametrize('t', [Fraction(1, 4), Fraction(3, 4)])
def test_functional_form(ctx, x, t):
    expected = oracle_3f2((1, 1, Fraction(3, 2)), (2 - x, 2 + x), 1 - t)
    assert abs(as_oracle(functional_3f2(x, t, ctx).value) - expected) < TIGHT


def test_functional_form_domain(ctx):
    with pytest.raises(DomainError):
        functional_3f2(Fraction(1, 4), 1, ctx)
    with pytest.raises(DomainError):
        functional_3f2(2, Fraction(1, 2), ctx)


@pytest.mark.parametrize('a, b, c, z', [
    (2, Fraction(6, 5), Fraction(4, 5), Fraction(-1, 2)),
    (1, Fraction(1, 3), Fraction(1, 4), Fraction(-1, 3)),
])
def test_quadratic_transformation(ctx, a, b, c, z):
    lhs, rhs = quad_transform_check(a, b, c, z, ctx)
    assert abs(lhs.value - rhs.value) < ctx.mp.mpf(10) ** -25


def test_quadratic_transformation_at_minus_one(fast_ctx):
    lhs, rhs = quad_transform_check(2, Fraction(13, 10), Fraction(7, 10), -1, fast_ctx)
    assert abs(lhs.value - rhs.value) < fast_ctx.mp.mpf(10) ** -10


def test_quadratic_transformation_domain(ctx):
    with pytest.raises(DomainError):
        quad_transform_check(1, Fraction(1, 3), Fraction(1, 4), Fraction(1, 2), ctx)


@pytest.mark.parametrize('a, b, c', [(Fraction(1, 2), Fraction(1, 2), 2), (Fraction(3, 10), Fraction(2, 5), 2)])
def test_gauss_summation(ctx, a, b, c):
    expected = mpmath.hyp2f1(as_oracle(Fraction(a)), as_oracle(Fraction(b)), as_oracle(Fraction(c)), 1)
    assert abs(as_oracle(gauss_2f1_unit(a, b, c, ctx)) - expected) < TIGHT


def test_gauss_special_cases(ctx):
    assert gauss_2f1_unit(-1, 2, 5, ctx) == ctx.real(Fraction(3, 5))
    assert gauss_2f1_unit(2, Fraction(-1, 2), 2, ctx) == 0
    with pytest.raises(DomainError):
        gauss_2f1_unit(1, 1, 2, ctx)
    with pytest.raises(DomainError):
        gauss_2f1_unit(Fraction(1, 2), Fraction(1, 2), -1, ctx)


@pytest.mark.parametrize('a, b', AB_SAMPLES)
def test_partial_fractions(ctx, a, b):
    x = Fraction(1, 4)
    expected = oracle_3f2((1, a, b), (2 - x, 2 + x), 1)
    assert abs(as_oracle(pf_3f2(a, b, x, ctx).value) - expected) < LOOSE


def test_partial_fractions_cot_form(ctx):
    """a = b = 1 reproduces ((x^2-1)/x)(1/x - pi/sin(pi x))"""
    for x in (Fraction(1, 10), Fraction(1, 4), Fraction(2, 5)):
        assert abs(pf_3f2(1, 1, x, ctx).value - cot_closed_form(x, ctx)) < ctx.mp.mpf(10) ** -20


def test_partial_fractions_domain(ctx):
    with pytest.raises(DomainError):
        pf_3f2(2, Fraction(1, 2), Fraction(1, 4), ctx)
    with pytest.raises(DomainError):
        pf_3f2(Fraction(3, 2), Fraction(3, 2), Fraction(1, 4), ctx)
    with pytest.raises(DomainError):
        pf_3f2(1, 1, 1, ctx)


@pytest.mark.parametrize('b', [Fraction(1, 2), 1, Fraction(3, 2)])
def test_single_sided_matches_bilateral(ctx, b):
    x = Fraction(2, 5)
    assert abs(single_sided_3f2(b, x, ctx).value - pf_3f2(1, b, x, ctx).value) < ctx.mp.mpf(10) ** -25


def test_single_sided_specialisations(ctx):
    x = Fraction(1, 4)
    assert abs(single_sided_3f2(Fraction(1, 2), x, ctx).value - eq43_series(x, ctx).value) < ctx.mp.mpf(10) ** -25
    assert abs(single_sided_3f2(1, x, ctx).value - cot_closed_form(x, ctx)) < ctx.mp.mpf(10) ** -25
    assert abs(single_sided_3f2(Fraction(3, 2), x, ctx).value - closed_3f2_x(x, ctx)) < ctx.mp.mpf(10) ** -25


def test_single_sided_domain(ctx):
    with pytest.raises(DomainError):
        single_sided_3f2(2, Fraction(1, 4), ctx)
    with pytest.raises(DomainError):
        cot_closed_form(0, ctx)


@pytest.mark.parametrize('a', [Fraction(1, 3), Fraction(2, 3)])
@pytest.mark.parametrize('r', [0, 1, 2])
def test_parametric_identity(fast_ctx, a, r):
    lhs, rhs = param_apery(a, r, fast_ctx)
    assert abs(lhs.value - rhs.value) < fast_ctx.mp.mpf(10) ** -10


def test_parametric_identity_at_half(fast_ctx):
    """a = 1/2 is the central-binomial series, with right side (3/2) zeta(3) at r = 1"""
    lhs, rhs = param_apery(Fraction(1, 2), 1, fast_ctx)
    assert str(lhs.value) == str(apery_series(1, fast_ctx).value)
    assert abs(as_oracle(rhs.value) - mpmath.mpf(3) / 2 * mpmath.zeta(3)) < LOOSE


def test_parametric_identity_domain(fast_ctx):
    with pytest.raises(DomainError):
        param_apery(1, 1, fast_ctx)
    with pytest.raises(UsageError):
        hurwitz_param_apery(Fraction(1, 3), 4, 1, fast_ctx)


@pytest.mark.parametrize('k, r', [(1, 0), (1, 1), (2, 1)])
def test_hurwitz_identity(fast_ctx, k, r):
    lhs, rhs = hurwitz_param_apery(Fraction(1, 3), k, r, fast_ctx)
    assert abs(lhs.value - rhs.value) < fast_ctx.mp.mpf(10) ** -6


def test_hurwitz_identity_without_log_weight(fast_ctx):
    lhs, _ = hurwitz_param_apery(Fraction(1, 3), 0, 1, fast_ctx)
    assert str(lhs.value) == str(param_apery(Fraction(1, 3), 1, fast_ctx)[0].value)


@pytest.mark.parametrize('k, r', [(0, 1), (1, 0), (1, 1), (2, 0)])
def test_t_harmonic_identity(fast_ctx, k, r):
    lhs, rhs = t_harmonic_apery(k, r, fast_ctx)
    assert abs(lhs.value - rhs.value) < fast_ctx.mp.mpf(10) ** -6
