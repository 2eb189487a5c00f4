"""
Exact truncated power series in x^2 and the generating-function check for
sum_r zeta*_n({2}_r) x^(2r) = prod_{j<=n} (1 - x^2/j^2)^(-1).
"""
import logging
from fractions import Fraction

from ..errors import DomainError, UsageError
from ..models.power_series import TruncSeries
from .finite_sums import build_table_2r

logger = logging.getLogger('exact-series-service')


def series_mul(s: TruncSeries, t: TruncSeries) -> TruncSeries:
    """Cauchy product truncated to the smaller order"""
    order = min(s.order, t.order)
    coeffs = []
    for j in range(order + 1):
        coeffs.append(sum((s[i] * t[j - i] for i in range(j + 1)), Fraction(0)))
    return TruncSeries(tuple(coeffs))


def series_inv(s: TruncSeries) -> TruncSeries:
    """Power-series inverse: b_0 = 1/a_0, b_k = -(1/a_0) sum_{i=1..k} a_i b_{k-i}"""
    if s[0] == 0:
        raise DomainError("series with zero constant term has no inverse")
    inv_a0 = 1 / s[0]
    b = [inv_a0]
    for k in range(1, s.order + 1):
        b.append(-inv_a0 * sum((s[i] * b[k - i] for i in range(1, k + 1)), Fraction(0)))
    return TruncSeries(tuple(b))


def series_add(s: TruncSeries, t: TruncSeries) -> TruncSeries:
    order = min(s.order, t.order)
    return TruncSeries(tuple(s[j] + t[j] for j in range(order + 1)))


def genfunc_lhs(n: int, R: int) -> TruncSeries:
    """Coefficients zeta*_n({2}_j) for j <= R"""
    if n < 0 or R < 0:
        raise UsageError(f"n and R must be non-negative, got n={n}, R={R}")
    table = build_table_2r(n, R)
    return TruncSeries(table.star_values[n])


def genfunc_rhs(n: int, R: int) -> TruncSeries:
    """prod_{j=1..n} (1 - x^2/j^2)^(-1) expanded to order R"""
    if n < 0 or R < 0:
        raise UsageError(f"n and R must be non-negative, got n={n}, R={R}")
    result = TruncSeries.one(R)
    for j in range(1, n + 1):
        factor = TruncSeries.from_coeffs([Fraction(1), Fraction(-1, j * j)], R)
        result = series_mul(result, series_inv(factor))
    return result


def check_gf(n: int, R: int) -> bool:
    """Exact coefficientwise equality of both sides of the generating function"""
    lhs = genfunc_lhs(n, R)
    rhs = genfunc_rhs(n, R)
    matches = lhs.coeffs == rhs.coeffs
    if not matches:
        logger.warning(f"Generating-function mismatch at n={n}, R={R}")
    return matches


def max_coefficient_gap(s: TruncSeries, t: TruncSeries) -> Fraction:
    order = min(s.order, t.order)
    return max(abs(s[j] - t[j]) for j in range(order + 1))
