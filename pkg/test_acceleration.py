"""
Convergence accelerators against closed-form sums.
"""
from fractions import Fraction

import mpmath
import pytest

from apery_verify.models.precision import PrecisionCtx
from apery_verify.services.acceleration import LevinAccumulator, cvz_bound, cvz_order_for, cvz_sum
from conftest import as_oracle

LOG2 = '0.69314718055994530941723212145817656807550013436025525412068'
PI_OVER_4 = '0.78539816339744830961566084581987572104929234984377645524374'


@pytest.fixture(scope='module')
def mp(ctx):
    return ctx.mp


def test_cvz_applies_the_alternation(mp):
    """1 - 1/2 + 1/3 - ... = log 2 from the unsigned magnitudes"""
    n = cvz_order_for(mp.mpf(10) ** -40, 1)
    value = cvz_sum([1 / mp.mpf(k) for k in range(1, n + 1)], mp)
    assert abs(as_oracle(value) - mpmath.mpf(LOG2)) < mpmath.mpf(10) ** -35


def test_cvz_leibniz(mp):
    n = cvz_order_for(mp.mpf(10) ** -40, 1)
    value = cvz_sum([1 / mp.mpf(2 * k + 1) for k in range(n)], mp)
    assert abs(as_oracle(value) - mpmath.mpf(PI_OVER_4)) < mpmath.mpf(10) ** -35


def test_cvz_bound_meets_order(mp):
    target = mp.mpf(10) ** -30
    n = cvz_order_for(target, 5)
    assert cvz_bound(n, 5, mp) < target
    assert cvz_order_for(target, 5) > cvz_order_for(target, mp.mpf(10) ** -20)


def test_levin_zeta_two():
    ctx = PrecisionCtx.for_tolerance(Fraction(1, 10**15), 192)
    mp = ctx.mp
    with mp.workprec(2 * ctx.precision_bits):
        acc = LevinAccumulator(mp, 1, mp.mpf(10) ** -15)
        n = 1
        while not acc.done and acc.terms_used < 200:
            acc.push(1 / mp.mpf(n) ** 2)
            n += 1
        value, err, reached = acc.result()
    assert reached
    assert err < mp.mpf(10) ** -15
    assert abs(as_oracle(value) - mpmath.pi ** 2 / 6) < mpmath.mpf(10) ** -12
