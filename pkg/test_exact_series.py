from fractions import Fraction

import pytest

from apery_verify.errors import DomainError, UsageError
from apery_verify.models.power_series import TruncSeries
from apery_verify.services.exact_series import (
    check_gf, genfunc_lhs, genfunc_rhs, max_coefficient_gap, series_add, series_inv, series_mul,
)


def test_inverse_of_one_minus_x2():
    """1/(1 - x^2/4) = sum 4^-j x^(2j)"""
    inv = series_inv(TruncSeries.from_coeffs([1, Fraction(-1, 4)], 8))
    assert inv.coeffs == tuple(Fraction(1, 4 ** j) for j in range(9))
    assert series_mul(inv, TruncSeries.from_coeffs([1, Fraction(-1, 4)], 8)) == TruncSeries.one(8)


def test_inverse_needs_constant_term():
    with pytest.raises(DomainError):
        series_inv(TruncSeries.from_coeffs([0, 1], 3))


def test_truncation_to_smaller_order():
    s = TruncSeries.from_coeffs([1, 2, 3], 2)
    t = TruncSeries.from_coeffs([1, 1], 5)
    assert series_mul(s, t).order == 2
    assert series_add(s, t).coeffs == (Fraction(2), Fraction(3), Fraction(3))


def test_empty_series_rejected():
    with pytest.raises(UsageError):
        TruncSeries(())


@pytest.mark.parametrize('n', [0, 1, 2, 7, 25])
def test_generating_function_exact(n):
    """Coefficientwise equality up to x^80"""
    assert check_gf(n, 40)
    assert max_coefficient_gap(genfunc_lhs(n, 40), genfunc_rhs(n, 40)) == 0


def test_generating_function_first_coefficients():
    lhs = genfunc_lhs(3, 2)
    assert lhs[0] == 1
    assert lhs[1] == Fraction(1) + Fraction(1, 4) + Fraction(1, 9)


def test_negative_order_rejected():
    with pytest.raises(UsageError):
        genfunc_rhs(3, -1)
