"""
Adaptive summation per decay class and the central-binomial series.
"""
from fractions import Fraction

import mpmath
import pytest

from apery_verify.errors import DomainError, UsageError
from apery_verify.models.precision import PrecisionCtx
from apery_verify.models.series import DecayClass, StreamedTerms, SumMethod, SumResult, TermSeq, combine
from apery_verify.services import series_engine
from apery_verify.services.finite_sums import build_table_2r, central_binomial_ratio
from apery_verify.services.series_engine import (
    apery_series, apery_series_family, apery_series_z, star_weighted_family, sum_adaptive, tail_bound_cb,
)
from apery_verify.services.special_functions import zeta_int
from conftest import as_oracle

LOOSE = mpmath.mpf(10) ** -10


def test_geometric(ctx):
    result = sum_adaptive(TermSeq(lambda n: ctx.mp.ldexp(1, -n), DecayClass.geometric(Fraction(1, 2))), ctx)
    assert abs(result.value - 1) < ctx.mp.mpf(10) ** -30
    assert result.reached
    assert result.method == SumMethod.DIRECT
    assert result.rigorous_bound is not None and result.rigorous_bound < 2 * ctx.eps


def test_finite(ctx):
    result = sum_adaptive(TermSeq(lambda n: ctx.real(n), DecayClass.finite(10), first_index=0), ctx)
    assert result.value == 55
    assert result.terms_used == 11


def test_algebraic(fast_ctx):
    mp = fast_ctx.mp
    result = sum_adaptive(TermSeq(lambda n: 1 / mp.mpf(n) ** 2, DecayClass.algebraic(2)), fast_ctx)
    assert result.method == SumMethod.LEVIN_U
    assert result.reached
    assert abs(as_oracle(result.value) - mpmath.zeta(2)) < LOOSE


def test_alternating(ctx):
    mp = ctx.mp
    result = sum_adaptive(TermSeq(lambda n: (-1) ** (n - 1) / mp.mpf(n), DecayClass.alternating()), ctx)
    assert result.method == SumMethod.CVZ
    assert abs(as_oracle(result.value) - mpmath.log(2)) < mpmath.mpf(10) ** -25


def test_harmonic_weighted_by_parts(fast_ctx):
    """sum H_n / n^3 = pi^4 / 72"""
    mp = fast_ctx.mp
    seq = TermSeq(lambda n: 1 / mp.mpf(n) ** 3, DecayClass.algebraic_log(3, 1), weights=lambda m: Fraction(1, m))
    result = sum_adaptive(seq, fast_ctx)
    assert result.method == SumMethod.SUMMATION_BY_PARTS
    assert abs(as_oracle(result.value) - mpmath.pi ** 4 / 72) < mpmath.mpf(10) ** -8


def test_depth_two_weight_by_parts(fast_ctx):
    """sum zeta_n(1,1) / n^3 = zeta(3,1,1) + zeta(4,1) = 4 zeta(5) - 2 zeta(2) zeta(3)"""
    mp = fast_ctx.mp
    seq = TermSeq(lambda n: 1 / mp.mpf(n) ** 3, DecayClass.algebraic_log(3, 2), weights=lambda m: Fraction(1, m))
    result = sum_adaptive(seq, fast_ctx)
    expected = 4 * mpmath.zeta(5) - 2 * mpmath.zeta(2) * mpmath.zeta(3)
    assert abs(as_oracle(result.value) - expected) < mpmath.mpf(10) ** -8



def test_by_parts_carries_inner_errors(fast_ctx, monkeypatch):
    """An error in an inner total reaches the final estimate through the weight mass"""
    mp = fast_ctx.mp

    def levin_stub(seq, ctx, target):
        return SumResult(value=mp.one, est_err=mp.mpf(10) ** -14, terms_used=9, method=SumMethod.LEVIN_U, reached=True)

    monkeypatch.setattr(series_engine, '_sum_algebraic', levin_stub)
    harmonic = TermSeq(lambda n: 1 / mp.mpf(n) ** 3, DecayClass.algebraic_log(3, 1), weights=lambda m: Fraction(1, m))
    result = sum_adaptive(harmonic, fast_ctx)
    mass = sum(mp.one / m for m in range(1, 11))
    assert abs(result.est_err - mp.mpf(10) ** -14 * (1 + mass)) < mp.mpf(10) ** -25
    assert result.reached

    heavy = TermSeq(lambda n: 1 / mp.mpf(n) ** 3, DecayClass.algebraic_log(3, 1), weights=lambda m: 10**4)
    result = sum_adaptive(heavy, fast_ctx)
    assert result.est_err > mp.mpf(10) ** -10
    assert not result.reached


def test_log_class_needs_weights(fast_ctx):
    with pytest.raises(UsageError):
        sum_adaptive(TermSeq(lambda n: fast_ctx.real(1) / n ** 3, DecayClass.algebraic_log(3, 1)), fast_ctx)


def test_invalid_decay_classes():
    with pytest.raises(UsageError):
        DecayClass.geometric(1)
    with pytest.raises(UsageError):
        DecayClass.algebraic_log(2, -1)


def test_term_cap_flags_partial_result():
    """Twenty terms cannot reach 1e-30 for sum 1/n^2"""
    ctx = PrecisionCtx.for_tolerance(Fraction(1, 10**30), 256, max_terms=20)
    result = sum_adaptive(TermSeq(lambda n: 1 / ctx.mp.mpf(n) ** 2, DecayClass.algebraic(2)), ctx)
    assert not result.reached
    assert result.terms_used <= 20


def test_streamed_terms_memoise():
    calls = []

    def factory():
        n = 0
        while True:
            calls.append(n)
            yield n * n
            n += 1

    terms = StreamedTerms(factory, 1)
    assert terms(3) == 4
    assert terms(1) == 0
    assert len(calls) == 3
    with pytest.raises(IndexError):
        terms(0)


def test_result_arithmetic():
    part = SumResult(value=2, est_err=Fraction(1, 10), terms_used=4, method=SumMethod.LEVIN_U)
    scaled = part.scaled(-3)
    assert scaled.value == -6 and scaled.est_err == Fraction(3, 10)
    combined = combine(8, [part, part.shifted(4)])
    assert combined.terms_used == 8
    assert combined.est_err == Fraction(1, 5)


def test_central_binomial_depth_zero(fast_ctx):
    """sum C(2n,n)/(n 4^n) = 2 log 2"""
    assert abs(as_oracle(apery_series(0, fast_ctx).value) - 2 * mpmath.log(2)) < LOOSE


@pytest.mark.parametrize('r', [1, 2, 3])
def test_central_binomial_series(fast_ctx, r):
    expected = 2 * (1 - mpmath.mpf(4) ** -r) * mpmath.zeta(2 * r + 1)
    result = apery_series(r, fast_ctx)
    assert abs(as_oracle(result.value) - expected) < LOOSE
    assert result.rigorous_bound is not None


def test_family_matches_single_series(fast_ctx):
    """Each depth has its own accelerator, so the family reproduces the single evaluation"""
    family = apery_series_family(3, fast_ctx)
    assert str(family[1].value) == str(apery_series(1, fast_ctx).value)
    assert str(family[3].value) == str(apery_series(3, fast_ctx).value)


def test_parametric_family_at_half(fast_ctx):
    assert str(star_weighted_family(Fraction(1, 2), 2, fast_ctx)[2].value) == str(apery_series(2, fast_ctx).value)


def test_parametric_family_real_parameter(fast_ctx):
    """A Real parameter agrees with its exact rational"""
    exact = star_weighted_family(Fraction(1, 4), 1, fast_ctx)[1].value
    real = star_weighted_family(fast_ctx.real(Fraction(1, 4)), 1, fast_ctx)[1].value
    assert abs(exact - real) < fast_ctx.mp.mpf(10) ** -10


def test_tail_bound_dominates_tail(ctx):
    """2 zeta*({2}_r) / sqrt(pi N) bounds the remainder after N terms"""
    N, r = 200, 1
    table = build_table_2r(N, r)
    partial = sum(
        (ctx.real(central_binomial_ratio(n) * table.star(n, r) / n) for n in range(1, N + 1)),
        ctx.mp.zero,
    )
    tail = 2 * ctx.real(Fraction(3, 4)) * zeta_int(3, ctx) - partial
    assert 0 < tail < tail_bound_cb(N, r, ctx)


def test_tail_bound_rejects_zero(ctx):
    with pytest.raises(UsageError):
        tail_bound_cb(0, 1, ctx)


def test_series_in_z_at_quarter(ctx):
    """r = 0, z = 1/4 gives 2 log(4/3)"""
    result = apery_series_z(0, Fraction(1, 4), ctx)
    assert abs(as_oracle(result.value) - 2 * mpmath.log(mpmath.mpf(4) / 3)) < mpmath.mpf(10) ** -25


@pytest.mark.parametrize('r', [1, 2])
@pytest.mark.parametrize('z', [Fraction(1, 4), Fraction(3, 4)])
def test_series_in_z_polylog_form(ctx, r, z):
    root = mpmath.sqrt(as_oracle(z))
    expected = -2 * mpmath.polylog(2 * r + 1, (root - 1) / (root + 1))
    assert abs(as_oracle(apery_series_z(r, z, ctx).value) - expected) < mpmath.mpf(10) ** -25


def test_series_in_z_domain(ctx):
    with pytest.raises(DomainError):
        apery_series_z(1, 0, ctx)
    with pytest.raises(DomainError):
        apery_series_z(1, Fraction(3, 2), ctx)
    with pytest.raises(UsageError):
        apery_series(-1, ctx)
