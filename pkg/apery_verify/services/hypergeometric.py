"""
Hypergeometric service: pFq evaluation at real arguments, the digamma closed
form of 3F2(1,1,3/2; 2-x,2+x; 1), its functional and quadratic-transformation
companions, Gauss's summation theorem, the partial-fraction representation and
the parametric Apery-like identities.
"""
import logging
from fractions import Fraction
from typing import Any, Iterator, Tuple

from ..errors import DomainError, UsageError
from ..models.hypergeometric import HypParams, is_nonpositive_integer
from ..models.precision import Number, PrecisionCtx, Real
from ..models.series import DecayClass, StreamedTerms, SumResult, TermSeq
from .finite_sums import complete_rows, elementary_rows, iter_rows_2r, pochhammer
from .numeric_core import const, is_integer
from .series_engine import star_weighted_family, sum_adaptive
from .special_functions import digamma, log_gamma

logger = logging.getLogger('hypergeometric-service')

MAX_LOG_POWER = 3


def as_param(value: Number) -> Any:
    """Parameters are handled as exact rationals"""
    if isinstance(value, bool):
        raise UsageError("boolean is not a numeric parameter")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    # an mpf is read through its decimal representation
    return Fraction(str(value))


def _check_x(x, ctx: PrecisionCtx):
    if is_integer(x) and x != 0:
        raise DomainError(f"x must not be a nonzero integer, got {x}")
    return ctx.real(x)


def hyp_eval(params: HypParams, ctx: PrecisionCtx, target=None) -> SumResult:
    """Sum pFq(upper; lower; z) with the decay class implied by z.

    Args:
        params (HypParams): upper and lower parameters with the argument
        ctx (PrecisionCtx): precision context
        target: absolute error goal, defaults to ctx.target_abs_err

    Returns:
        SumResult: finite sum for terminating parameters, geometric for |z| < 1,
        Levin for z = 1 and CVZ for z = -1
    """
    mp = ctx.mp
    z = params.argument
    zr = ctx.real(z)

    def terms() -> Iterator[Real]:
        upper = [ctx.real(a) for a in params.upper]
        lower = [ctx.real(b) for b in params.lower]
        zw = ctx.real(z)
        term = mp.one
        n = 0
        while True:
            yield term
            num = mp.one
            for a in upper:
                num *= a + n
            den = mp.one
            for b in lower:
                den *= b + n
            term = term * num / den * zw / (n + 1)
            n += 1

    order = params.terminating_order()
    if order is not None:
        decay = DecayClass.finite(order)
    elif abs(zr) < 1:
        decay = DecayClass.geometric((1 + abs(zr)) / 2)
    elif params.p != params.q + 1:
        raise DomainError(f"{params.p}F{params.q} at |z| = 1 is outside the supported range")
    else:
        s = sum(ctx.real(b) for b in params.lower) - sum(ctx.real(a) for a in params.upper)
        if zr == 1:
            if s <= 0:
                raise DomainError(f"unit-argument series diverges: convergence margin {mp.nstr(s, 8)} <= 0")
            decay = DecayClass.algebraic(1 + s)
        elif zr == -1:
            if s <= -1:
                raise DomainError(f"series at z = -1 diverges: convergence margin {mp.nstr(s, 8)} <= -1")
            decay = DecayClass.alternating()
        else:
            raise DomainError(f"argument {z} lies outside the unit disc")
    logger.debug(f"Evaluating {params.p}F{params.q} at z={mp.nstr(zr, 10)} as {decay.kind.value}")
    return sum_adaptive(TermSeq(StreamedTerms(terms, 0), decay, first_index=0), ctx, target)


def closed_3f2_x(x: Number, ctx: PrecisionCtx) -> Real:
    """Digamma closed form of 3F2(1,1,3/2; 2-x,2+x; 1) for |x| < 1"""
    mp = ctx.mp
    with mp.extraprec(16):
        xr = ctx.real(x)
        if abs(xr) >= 1:
            raise DomainError(f"closed form is evaluated only for |x| < 1, got {x}")
        w = 1 - xr * xr
        value = (
            4 * const('log2', ctx) * w
            + 2 * w * (digamma(1 - xr / 2, ctx) + digamma(1 + xr / 2, ctx))
            - 2 * w * (digamma(1 - xr, ctx) + digamma(1 + xr, ctx))
        )
    return +value


def functional_3f2(x: Number, t: Number, ctx: PrecisionCtx) -> SumResult:
    """3F2(1,1,3/2; 2-x,2+x; 1-t) through the geometric series in w = (sqrt t - 1)/(sqrt t + 1)"""
    mp = ctx.mp
    tr = ctx.real(t)
    if not 0 < tr < 1:
        raise DomainError(f"t must lie in (0, 1), got {t}")
    _check_x(x, ctx)

    def terms() -> Iterator[Real]:
        x2 = ctx.real(x) ** 2
        root = mp.sqrt(ctx.real(t))
        w = (root - 1) / (root + 1)
        power = mp.one
        n = 1
        while True:
            power *= w
            yield power * 2 * n / (x2 - n * n)
            n += 1

    w_abs = (1 - mp.sqrt(tr)) / (1 + mp.sqrt(tr))
    series = sum_adaptive(TermSeq(StreamedTerms(terms, 1), DecayClass.geometric(w_abs)), ctx)
    xr = ctx.real(x)
    return series.scaled(2 * (1 - xr * xr) / (1 - tr))


def quad_transform_check(a: Number, b: Number, c: Number, z: Number, ctx: PrecisionCtx) -> Tuple[SumResult, SumResult]:
    """Both sides of the quadratic transformation

    3F2(a,b,c; 1+a-b,1+a-c; z) = (1-z)^(-a) 3F2(a-b-c+1, a/2, (a+1)/2; 1+a-b,1+a-c; -4z/(1-z)^2)

    for -1 <= z <= 0, where the transformed argument stays in [0, 1].
    """
    a, b, c, z = (as_param(v) for v in (a, b, c, z))
    if not -1 <= z <= 0:
        raise DomainError(f"z must lie in [-1, 0], got {z}")
    lower = (1 + a - b, 1 + a - c)
    lhs = hyp_eval(HypParams((a, b, c), lower, z), ctx)
    w = -4 * z / (1 - z) ** 2
    transformed = hyp_eval(HypParams((a - b - c + 1, a / 2, (a + 1) / 2), lower, w), ctx)
    factor = ctx.mp.power(ctx.real(1 - z), -ctx.real(a))
    return lhs, transformed.scaled(factor)


def gauss_2f1_unit(a: Number, b: Number, c: Number, ctx: PrecisionCtx) -> Real:
    """2F1(a,b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).

    A terminating series (a or b a nonpositive integer -m) uses the exact
    Chu-Vandermonde value (c-b)_m/(c)_m. A pole of Gamma(c) or Gamma(c-a-b)
    is a domain error; a pole in the denominator makes the value 0.
    """
    mp = ctx.mp
    a, b, c = (as_param(v) for v in (a, b, c))
    if is_nonpositive_integer(c):
        raise DomainError(f"c must not be a nonpositive integer, got {c}")
    if is_nonpositive_integer(b) and not is_nonpositive_integer(a):
        a, b = b, a
    if is_nonpositive_integer(a):
        m = -int(a)
        value = pochhammer(c - b, m) / pochhammer(c, m)
        return ctx.real(value) if isinstance(value, Fraction) else +value
    margin = c - a - b
    if margin <= 0:
        raise DomainError(f"2F1 at unit argument needs c - a - b > 0, got {margin}")
    if is_nonpositive_integer(c - a) or is_nonpositive_integer(c - b):
        return mp.zero
    args = [ctx.real(v) for v in (c, margin, c - a, c - b)]
    if all(v > 0 for v in args):
        with mp.extraprec(16):
            value = mp.exp(log_gamma(args[0], ctx) + log_gamma(args[1], ctx) - log_gamma(args[2], ctx) - log_gamma(args[3], ctx))
        return +value
    with mp.extraprec(16):
        value = mp.gamma(args[0]) * mp.gamma(args[1]) / (mp.gamma(args[2]) * mp.gamma(args[3]))
    return +value


def _alternating_sum(terms, ctx: PrecisionCtx) -> SumResult:
    return sum_adaptive(TermSeq(StreamedTerms(terms, 1), DecayClass.alternating()), ctx)


def pf_3f2(a: Number, b: Number, x: Number, ctx: PrecisionCtx) -> SumResult:
    """3F2(1,a,b; 2-x,2+x; 1) from its bilateral partial-fraction series.

    Pairing k with -k gives (1-x^2) sum_{k>=1} (-1)^(k-1) d_k 2k/(k^2-x^2) with
    d_1 = Gamma(3-a-b)/(Gamma(3-a)Gamma(3-b)) and
    d_{k+1}/d_k = (k+1)(a+k-1)(b+k-1) / (k(2+k-a)(2+k-b)).
    """
    a, b = as_param(a), as_param(b)
    for name, value in (('a', a), ('b', b)):
        if is_integer(value) and value not in (0, 1):
            raise DomainError(f"{name} must not be an integer other than 0 or 1, got {value}")
    if is_integer(a + b) and a + b >= 3:
        raise DomainError(f"a + b must not be an integer >= 3, got {a + b}")
    mp = ctx.mp
    xr = _check_x(x, ctx)

    def terms() -> Iterator[Real]:
        ar, br = ctx.real(a), ctx.real(b)
        x2 = ctx.real(x) ** 2
        d = mp.gamma(3 - ar - br) / (mp.gamma(3 - ar) * mp.gamma(3 - br))
        k = 1
        while True:
            sign = 1 if k % 2 else -1
            yield sign * d * 2 * k / (k * k - x2)
            d = d * (k + 1) * (ar + k - 1) * (br + k - 1) / (k * (2 + k - ar) * (2 + k - br))
            k += 1

    return _alternating_sum(terms, ctx).scaled(1 - xr * xr)


def single_sided_3f2(b: Number, x: Number, ctx: PrecisionCtx) -> SumResult:
    """3F2(1,1,b; 2-x,2+x; 1) = (x^2-1) sum_k (-1)^k (b)_{k-1}/(2-b)_k (1/(x+k) - 1/(x-k))"""
    b = as_param(b)
    if is_integer(b) and b >= 2:
        raise DomainError(f"b must not be an integer >= 2, got {b}")
    mp = ctx.mp
    xr = _check_x(x, ctx)

    def terms() -> Iterator[Real]:
        br = ctx.real(b)
        xw = ctx.real(x)
        ratio = 1 / (2 - br)  # (b)_0 / (2-b)_1
        k = 1
        while True:
            sign = -1 if k % 2 else 1
            yield sign * ratio * (1 / (xw + k) - 1 / (xw - k))
            ratio = ratio * (br + k - 1) / (2 - br + k)
            k += 1

    return _alternating_sum(terms, ctx).scaled(xr * xr - 1)


def eq43_series(x: Number, ctx: PrecisionCtx) -> SumResult:
    """(x^2-1) sum_k (-1)^k k / ((k^2 - 1/4)(k^2 - x^2)), the b = 1/2 single-sided form"""
    mp = ctx.mp
    xr = _check_x(x, ctx)

    def terms() -> Iterator[Real]:
        x2 = ctx.real(x) ** 2
        quarter = mp.mpf(1) / 4
        k = 1
        while True:
            sign = -1 if k % 2 else 1
            yield sign * k / ((k * k - quarter) * (k * k - x2))
            k += 1

    return _alternating_sum(terms, ctx).scaled(xr * xr - 1)


def cot_closed_form(x: Number, ctx: PrecisionCtx) -> Real:
    """((x^2-1)/x)(1/x - pi/sin(pi x)), the value of 3F2(1,1,1; 2-x,2+x; 1)"""
    mp = ctx.mp
    xr = _check_x(x, ctx)
    if xr == 0:
        raise DomainError("the cot closed form is singular at x = 0")
    with mp.extraprec(16):
        pi = const('pi', ctx)
        value = (xr * xr - 1) / xr * (1 / xr - pi / mp.sin(pi * xr))
    return +value


def _check_unit_interval(a) -> Any:
    a = as_param(a)
    if not 0 < a < 1:
        raise DomainError(f"a must lie in (0, 1), got {a}")
    return a


def param_apery(a: Number, r: int, ctx: PrecisionCtx) -> Tuple[SumResult, SumResult]:
    """Both sides of sum_n (a)_n/(n! n) zeta*_n({2}_r) = 2 sum_n (-1)^(n-1) (a)_n/(1-a)_n / n^(2r+1)"""
    a = _check_unit_interval(a)
    if r < 0:
        raise UsageError(f"r must be non-negative, got {r}")
    lhs = star_weighted_family(a, r, ctx)[r]

    def terms() -> Iterator[Real]:
        ar = ctx.real(a)
        ratio = ctx.mp.one
        n = 1
        while True:
            ratio = ratio * (ar + n - 1) / (n - ar)
            sign = 1 if n % 2 else -1
            yield sign * ratio / ctx.mp.mpf(n) ** (2 * r + 1)
            n += 1

    rhs = _alternating_sum(terms, ctx).scaled(2)
    return lhs, rhs


def _log_weighted_sides(coef_step, u, v, k: int, r: int, exponent, ctx: PrecisionCtx) -> Tuple[SumResult, SumResult]:
    """LHS sum_n c_n zeta*_n({2}_r) e_k(n; u) and RHS 2 sum_n (-1)^(n-1) q_n / n^(2r+1) sum_{i+j=k} e_i(n; u) h_j(n; v).

    coef_step(n, previous) advances the pair (c_n n, q_n) from n-1 to n.
    """
    mp = ctx.mp

    def lhs_terms() -> Iterator[Real]:
        rows = iter_rows_2r(r, ctx)
        next(rows)
        state = (mp.one, mp.one)
        for n, star, _ in rows:
            state = coef_step(n, state)
            yield state[0] / n * star[r]

    lhs = sum_adaptive(
        TermSeq(StreamedTerms(lhs_terms, 1), DecayClass.algebraic_log(exponent, k), weights=u),
        ctx,
    )

    def rhs_terms() -> Iterator[Real]:
        strict = elementary_rows(k, u)
        star = complete_rows(k, v)
        next(strict)
        next(star)
        state = (mp.one, mp.one)
        n = 1
        while True:
            e, h = next(strict), next(star)
            state = coef_step(n, state)
            inner = sum(ctx.real(e[i]) * ctx.real(h[k - i]) for i in range(k + 1))
            sign = 1 if n % 2 else -1
            yield sign * state[1] * inner / mp.mpf(n) ** (2 * r + 1)
            n += 1

    rhs = _alternating_sum(rhs_terms, ctx).scaled(2)
    return lhs, rhs


def hurwitz_param_apery(a: Number, k: int, r: int, ctx: PrecisionCtx) -> Tuple[SumResult, SumResult]:
    """Both sides of the k-th a-derivative of the parametric identity:

    sum_n (a)_n/(n! n) zeta*_n({2}_r) zeta_n({1}_k; a)
        = 2 sum_{i+j=k} sum_n (-1)^(n-1)/n^(2r+1) (a)_n/(1-a)_n zeta_n({1}_i; a) zeta*_n({1}_j; 1-a)
    """
    a = _check_unit_interval(a)
    if r < 0 or k < 0:
        raise UsageError(f"k and r must be non-negative, got k={k}, r={r}")
    if k > MAX_LOG_POWER:
        raise UsageError(f"k must be at most {MAX_LOG_POWER}, got {k}")
    if k == 0:
        return param_apery(a, r, ctx)
    mp = ctx.mp

    def u(m: int) -> Real:
        return 1 / (m + ctx.real(a) - 1)

    def v(m: int) -> Real:
        return 1 / (m - ctx.real(a))

    def coef_step(n: int, state):
        ar = ctx.real(a)
        c, q = state
        return c * (ar + n - 1) / n, q * (ar + n - 1) / (n - ar)

    return _log_weighted_sides(coef_step, u, v, k, r, 2 - ctx.real(a), ctx)


def t_harmonic_apery(k: int, r: int, ctx: PrecisionCtx) -> Tuple[SumResult, SumResult]:
    """The a = 1/2 case written with t-harmonic sums and central binomial ratios:

    sum_n C(2n,n)/(n 4^n) zeta*_n({2}_r) t_n({1}_k) = 2 sum_{i+j=k} sum_n (-1)^(n-1)/n^(2r+1) t_n({1}_i) t*_n({1}_j)

    The t-weights 1/(m - 1/2) enter as exact rationals.
    """
    if r < 0 or k < 0:
        raise UsageError(f"k and r must be non-negative, got k={k}, r={r}")
    if k > MAX_LOG_POWER:
        raise UsageError(f"k must be at most {MAX_LOG_POWER}, got {k}")

    def t_weight(m: int) -> Fraction:
        return Fraction(2, 2 * m - 1)

    def coef_step(n: int, state):
        c, q = state
        return c * (2 * n - 1) / (2 * n), q

    return _log_weighted_sides(coef_step, t_weight, t_weight, k, r, Fraction(3, 2), ctx)
