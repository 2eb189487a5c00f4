"""
Mixed values: the series over alternating harmonic numbers H̄_{2n} weighted by
zeta_{n-1}({2}_{r-1})/n^2, the reduced integral 2 int_0^1 Li_{{2}_r}(t^2)/(1+t) dt,
the double-sum form and the relation between the t_n and H_n weighted series.
"""
import logging
from fractions import Fraction
from typing import Iterator, Tuple

from mpmath.calculus.quadrature import GaussLegendre

from ..errors import UsageError
from ..models.precision import PrecisionCtx, Real
from ..models.quadrature import QuadratureRule
from ..models.series import DecayClass, StreamedTerms, SumMethod, SumResult, TermSeq, combine
from .acceleration import cvz_order_for, cvz_sum
from .finite_sums import iter_rows_2r
from .numeric_core import const
from .series_engine import apery_series_family, sum_adaptive
from .special_functions import mpl_2r, mpl_2r_remainder, zeta_2r, zeta_int

logger = logging.getLogger('mixed-values-service')

QUADRATURE_MIN_DEGREE = 5  # 48 nodes
QUADRATURE_MAX_DEGREE = 9  # 768 nodes


def _check_depth(r: int):
    if r < 1:
        raise UsageError(f"r must be at least 1, got {r}")


def _depth_weights(r: int, ctx: PrecisionCtx) -> Iterator[Tuple[int, Real]]:
    """(n, zeta_{n-1}({2}_{r-1})) for n >= r, the first nonzero index"""
    for m, _, plain in iter_rows_2r(r - 1, ctx):
        n = m + 1
        if n >= r:
            yield n, plain[r - 1]


def alt_harmonic_tail(n: int, ctx: PrecisionCtx) -> Real:
    """H̄_{2n} + log 2 = sum_{i>=0} (-1)^i / (2n+1+i), by CVZ acceleration"""
    mp = ctx.mp
    leading = mp.one / (2 * n + 1)
    count = cvz_order_for(mp.ldexp(ctx.eps, -8), leading)
    return cvz_sum([mp.one / (2 * n + 1 + i) for i in range(count)], mp)


def mixed_lhs(r: int, ctx: PrecisionCtx) -> SumResult:
    """sum_n H̄_{2n} zeta_{n-1}({2}_{r-1}) / n^2.

    With H̄_{2n} = -log 2 + R_n the log 2 part sums to -log 2 zeta({2}_r)
    exactly, leaving sum_n R_n zeta_{n-1}({2}_{r-1}) / n^2 with terms ~ n^-3.
    """
    _check_depth(r)

    def terms():
        for n, weight in _depth_weights(r, ctx):
            yield alt_harmonic_tail(n, ctx) * weight / (n * n)

    remainder = sum_adaptive(TermSeq(StreamedTerms(terms, r), DecayClass.algebraic(3), first_index=r), ctx)
    return remainder.shifted(-const('log2', ctx) * zeta_2r(r, ctx))


def mixed_rhs(r: int, ctx: PrecisionCtx) -> Real:
    """sum_{j=1..r} (-1)^j (1 - 4^-j) zeta({2}_{r-j}) zeta(2j+1)"""
    _check_depth(r)
    mp = ctx.mp
    total = mp.zero
    for j in range(1, r + 1):
        factor = ctx.real((-1) ** j * (1 - Fraction(1, 4 ** j)))
        total += factor * zeta_2r(r - j, ctx) * zeta_int(2 * j + 1, ctx)
    return total


def gauss_legendre_rule(degree: int, ctx: PrecisionCtx) -> QuadratureRule:
    """Gauss-Legendre rule with 3 * 2^(degree-1) nodes on (0, 1), cached per precision"""
    mp = ctx.mp
    key = ('gauss_legendre', degree, mp.prec)
    rule = ctx.cache.get(key)
    if rule is None:
        raw = GaussLegendre(mp).calc_nodes(degree, mp.prec)
        rule = QuadratureRule(
            nodes=tuple((x + 1) / 2 for x, _ in raw),
            weights=tuple(w / 2 for _, w in raw),
            degree=degree,
        )
        rule = ctx.cache.put(key, rule)
    return rule


def li_integrand(r: int, t, ctx: PrecisionCtx) -> Real:
    """2 Li_{{2}_r}(t^2) / (1 + t)"""
    t = ctx.real(t)
    return 2 * mpl_2r(r, t * t, ctx) / (1 + t)


def integral_li(r: int, ctx: PrecisionCtx) -> SumResult:
    """2 int_0^1 Li_{{2}_r}(t^2) / (1+t) dt by Gauss-Legendre with node doubling.

    The substitution t = 1 - (1-u)^3 damps the (1-t) log(1-t) endpoint behaviour
    of the integrand.
    """
    _check_depth(r)
    mp = ctx.mp
    target = ctx.eps
    previous = None
    value = mp.zero
    est_err = mp.inf
    reached = False
    nodes_used = 0
    with ctx.workprec():

        def transformed(u):
            s = 1 - u
            t = 1 - s ** 3
            return li_integrand(r, t, ctx) * 3 * s * s

        for degree in range(QUADRATURE_MIN_DEGREE, QUADRATURE_MAX_DEGREE + 1):
            rule = gauss_legendre_rule(degree, ctx)
            value = rule.apply(transformed)
            nodes_used = rule.size
            if previous is not None:
                est_err = abs(value - previous)
                logger.debug(f"Quadrature with {rule.size} nodes moved by {mp.nstr(est_err, 5)}")
                if est_err < target:
                    reached = True
                    break
            previous = value
    # the integrand weight 2/(1+t) integrates to 2 log 2 < 2
    est_err = est_err + 2 * mpl_2r_remainder(r, ctx)
    reached = reached and est_err < target
    if not reached:
        logger.warning(f"Quadrature refinement stopped at {nodes_used} nodes with error {mp.nstr(est_err, 5)}")
    return SumResult(value=+value, est_err=+est_err, terms_used=nodes_used, method=SumMethod.QUADRATURE, reached=reached)


def eq34_check(r: int, ctx: PrecisionCtx) -> Tuple[SumResult, SumResult]:
    """sum_{j=1..r+1} (-1)^(j+1) zeta({2}_{r-j+1}) S_{j-1} against the reduced integral,
    where S_m is the central-binomial series of depth m
    """
    _check_depth(r)
    family = apery_series_family(r, ctx)
    parts = []
    for j in range(1, r + 2):
        sign = 1 if j % 2 else -1
        parts.append(family[j - 1].scaled(sign * zeta_2r(r - j + 1, ctx)))
    lhs = combine(sum((p.value for p in parts), ctx.mp.zero), parts, SumMethod.LEVIN_U)
    return lhs, integral_li(r, ctx)


def eq35_doublesum(r: int, ctx: PrecisionCtx) -> SumResult:
    """2 sum_{n_1 > ... > n_r} H̄_{2n_1} / (n_1^2 ... n_r^2) = 2 sum_n H̄_{2n} zeta_{n-1}({2}_{r-1}) / n^2,
    summed without splitting off log 2
    """
    _check_depth(r)
    mp = ctx.mp

    def terms():
        alt = mp.zero
        last = 0
        for n, weight in _depth_weights(r, ctx):
            while last < n:
                last += 1
                alt += mp.one / (2 * last) - mp.one / (2 * last - 1)
            yield alt * weight / (n * n)

    return sum_adaptive(TermSeq(StreamedTerms(terms, r), DecayClass.algebraic(2), first_index=r), ctx).scaled(2)


def eq35_check(r: int, ctx: PrecisionCtx) -> Tuple[SumResult, SumResult]:
    """The double sum against integral_li(r) - 2 zeta({2}_r) log 2"""
    lhs = eq35_doublesum(r, ctx)
    rhs = integral_li(r, ctx).shifted(-2 * zeta_2r(r, ctx) * const('log2', ctx))
    return lhs, rhs


def _weighted_by_nested_one(r: int, weights, ctx: PrecisionCtx) -> SumResult:
    def coefficients():
        for n, weight in _depth_weights(r, ctx):
            yield weight / (n * n)

    seq = TermSeq(StreamedTerms(coefficients, r), DecayClass.algebraic_log(2, 1), first_index=r, weights=weights)
    return sum_adaptive(seq, ctx)


def harmonic_weighted_series(r: int, ctx: PrecisionCtx) -> SumResult:
    """sum_n H_n zeta_{n-1}({2}_{r-1}) / n^2"""
    _check_depth(r)
    return _weighted_by_nested_one(r, lambda m: Fraction(1, m), ctx)


def odd_harmonic_weighted_series(r: int, ctx: PrecisionCtx) -> SumResult:
    """sum_n t_n zeta_{n-1}({2}_{r-1}) / n^2 with t_n = sum_{k<=n} 1/(k - 1/2)"""
    _check_depth(r)
    return _weighted_by_nested_one(r, lambda m: Fraction(2, 2 * m - 1), ctx)


def t_relation_check(r: int, ctx: PrecisionCtx) -> Tuple[SumResult, SumResult]:
    """sum t_n w_n against sum H_n w_n - 2 mixed_rhs(r), w_n = zeta_{n-1}({2}_{r-1}) / n^2"""
    lhs = odd_harmonic_weighted_series(r, ctx)
    rhs = harmonic_weighted_series(r, ctx).shifted(-2 * mixed_rhs(r, ctx))
    return lhs, rhs
