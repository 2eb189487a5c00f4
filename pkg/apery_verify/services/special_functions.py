"""
Scalar special functions at high precision: integer zeta values, digamma,
log-gamma, polylogarithms and the depth-r multiple polylogarithm
Li_{2,...,2}(x).
"""
import logging
import math
from fractions import Fraction
from math import factorial
from typing import List, Tuple

from ..errors import DomainError, UsageError
from ..models.precision import Number, PrecisionCtx, Real
from .acceleration import CVZ_RATE, cvz_order_for, cvz_sum
from .finite_sums import harmonic, iter_rows_2r
from .numeric_core import bernoulli, is_integer

logger = logging.getLogger('special-functions-service')

DIRECT_POLYLOG_LIMIT = 256
MPL_SPLIT_INDICES = (64, 128, 256, 512)
MPL_MAX_EXPANSION = 60


def zeta_int(m: int, ctx: PrecisionCtx) -> Real:
    """Riemann zeta at an integer m >= 2 from the alternating eta series.

    The eta series is summed with CVZ weights to the full working precision,
    then zeta(m) = eta(m) / (1 - 2^(1-m)). Values are cached per precision.
    """
    if not is_integer(m) or m < 2:
        raise DomainError(f"zeta_int needs an integer m >= 2, got {m}")
    m = int(m)
    mp = ctx.mp
    prec = mp.prec
    cached = ctx.zeta_cache.get(m, prec)
    if cached is not None:
        return cached
    n = int(math.ceil((prec + 8) * math.log(2) / math.log(CVZ_RATE))) + 4
    with mp.extraprec(16):
        magnitudes = [1 / mp.mpf(k) ** m for k in range(1, n + 1)]
        eta = cvz_sum(magnitudes, mp)
        value = eta / (1 - mp.mpf(2) ** (1 - m))
    return ctx.zeta_cache.put(m, prec, +value)


def zeta_nonpositive(n: int) -> Fraction:
    """zeta(-n) = (-1)^n B_{n+1} / (n+1) for n >= 0"""
    return (-1) ** n * bernoulli(n + 1) / (n + 1)


def digamma(s: Number, ctx: PrecisionCtx) -> Real:
    """psi(s) for real s > 0: upward recurrence, then the Bernoulli asymptotic series"""
    mp = ctx.mp
    x = ctx.real(s)
    if x <= 0:
        raise DomainError(f"digamma is evaluated only for s > 0, got {s}")
    with mp.extraprec(32):
        threshold = max(10, mp.prec // 4)
        shift = mp.zero
        while x < threshold:
            shift -= 1 / x
            x += 1
        result = mp.log(x) - 1 / (2 * x)
        x2 = x * x
        power = x2
        eps = mp.ldexp(1, -mp.prec)
        k = 1
        while True:
            term = ctx.real(bernoulli(2 * k)) / (2 * k * power)
            result -= term
            if abs(term) < eps:
                break
            k += 1
            power *= x2
        result += shift
    return +result


def log_gamma(s: Number, ctx: PrecisionCtx) -> Real:
    x = ctx.real(s)
    if x <= 0:
        raise DomainError(f"log_gamma is evaluated only for s > 0, got {s}")
    return ctx.mp.loggamma(x)


def _polylog_direct(p: int, x: Real, eps: Real, ctx: PrecisionCtx) -> Real:
    mp = ctx.mp
    q = abs(x)
    total = mp.zero
    power = mp.one
    n = 0
    while True:
        n += 1
        power *= x
        term = power / mp.mpf(n) ** p
        total += term
        tail = abs(term) * q / (1 - q)
        if p >= 2:
            tail = min(tail, mp.mpf(n) ** (1 - p) / (p - 1))
        if tail < eps:
            return total
        if n >= ctx.geometric_max_terms:
            logger.warning(f"Polylog direct sum stopped at {n} terms with tail bound {mp.nstr(tail, 5)}")
            return total


def _direct_is_cheap(p: int, x: float, eps: float) -> bool:
    if p >= 2 and (eps * (p - 1)) ** (-1.0 / (p - 1)) <= DIRECT_POLYLOG_LIMIT:
        return True
    if x >= 1.0:
        return False
    return math.log(max(eps * (1 - x), 1e-300)) / math.log(x) <= DIRECT_POLYLOG_LIMIT


def _polylog_log_expansion(p: int, x: Real, eps: Real, ctx: PrecisionCtx) -> Real:
    """Li_p(e^mu) = mu^(p-1)/(p-1)! (H_{p-1} - log(-mu)) + sum_{k != p-1} zeta(p-k) mu^k / k!"""
    mp = ctx.mp
    mu = mp.log(x)
    two_pi = 2 * mp.pi
    result = mu ** (p - 1) / factorial(p - 1) * (ctx.real(harmonic(p - 1)) - mp.log(-mu))
    mu_power = mp.one
    k = 0
    while True:
        if k != p - 1:
            if p - k >= 2:
                z = zeta_int(p - k, ctx)
            else:
                z = ctx.real(zeta_nonpositive(k - p))
            result += z * mu_power / factorial(k)
        if k > p and abs(mu_power) * two_pi ** (p - k) < eps:
            return result
        k += 1
        mu_power *= mu


def polylog(p: int, x: Number, ctx: PrecisionCtx) -> Real:
    """Li_p(x) = sum x^n / n^p for integer p >= 1 and real x in [-1, 1].

    Args:
        p (int): order, at least 1
        x: argument in [-1, 1], excluding (p, x) = (1, 1)
        ctx (PrecisionCtx): precision context

    Returns:
        Real: the polylogarithm value
    """
    if not is_integer(p) or p < 1:
        raise DomainError(f"polylog order must be an integer >= 1, got {p}")
    p = int(p)
    mp = ctx.mp
    value = ctx.real(x)
    if abs(value) > 1:
        raise DomainError(f"polylog argument {x} lies outside [-1, 1]")
    if p == 1 and value == 1:
        raise DomainError("Li_1(1) diverges")
    if value == 0:
        return mp.zero
    if p == 1:
        return -mp.log(1 - value)
    if value == 1:
        return zeta_int(p, ctx)
    eps = ctx.eps * mp.ldexp(1, -8)
    with ctx.workprec():
        v = ctx.real(x)
        if abs(v) <= mp.mpf(1) / 2:
            result = _polylog_direct(p, v, eps, ctx)
        elif v < 0:
            n = cvz_order_for(eps, abs(v))
            magnitudes = [abs(v) ** k / mp.mpf(k) ** p for k in range(1, n + 1)]
            result = -cvz_sum(magnitudes, mp)
        elif _direct_is_cheap(p, float(v), max(float(eps), 1e-300)):
            result = _polylog_direct(p, v, eps, ctx)
        else:
            result = _polylog_log_expansion(p, v, eps, ctx)
    return +result


def zeta_2r(r: int, ctx: PrecisionCtx) -> Real:
    """zeta({2}_r) = pi^(2r) / (2r+1)!"""
    if r < 0:
        raise UsageError(f"r must be non-negative, got {r}")
    mp = ctx.mp
    return mp.pi ** (2 * r) / factorial(2 * r + 1)


def _power_sums(r: int, ctx: PrecisionCtx) -> List[Real]:
    return [None] + [zeta_int(2 * i, ctx) for i in range(1, r + 1)]


def zeta_star_2r(r: int, ctx: PrecisionCtx) -> Real:
    """zeta*({2}_r) from the power sums zeta(2i) through r h_r = sum p_i h_{r-i}"""
    if r < 0:
        raise UsageError(f"r must be non-negative, got {r}")
    mp = ctx.mp
    p = _power_sums(r, ctx)
    h = [mp.one]
    for m in range(1, r + 1):
        h.append(sum(p[i] * h[m - i] for i in range(1, m + 1)) / m)
    return h[r]


def zeta_2r_newton(r: int, ctx: PrecisionCtx) -> Real:
    """zeta({2}_r) from the power sums through r e_r = sum (-1)^(i-1) e_{r-i} p_i, without pi"""
    if r < 0:
        raise UsageError(f"r must be non-negative, got {r}")
    mp = ctx.mp
    p = _power_sums(r, ctx)
    e = [mp.one]
    for m in range(1, r + 1):
        e.append(sum((-1) ** (i - 1) * e[m - i] * p[i] for i in range(1, m + 1)) / m)
    return e[r]


def _mpl_coefficients(r: int, count: int, ctx: PrecisionCtx) -> List[Real]:
    """c_n = zeta_{n-1}({2}_{r-1}) / n^2 for n = 1..count, cached per precision"""
    key = ('mpl_coefficients', r, ctx.mp.prec)
    coeffs = ctx.cache.get(key)
    if coeffs is not None and len(coeffs) >= count:
        return coeffs
    coeffs = []
    for n, _, plain in iter_rows_2r(r - 1, ctx):
        if n >= count:
            break
        coeffs.append(plain[r - 1] / ((n + 1) * (n + 1)))
    return ctx.cache.put(key, coeffs)


def _expansion_order(alpha: List[Real], M: int, eps: Real, mp) -> Tuple[int, Real]:
    """Lowest order J whose first omitted term alpha_{J+1} M^-(J+2) is below eps,
    or the order minimising that term, together with the term"""
    best = None
    for J in range(MPL_MAX_EXPANSION + 1):
        omitted = max(abs(alpha[J + 1]), abs(alpha[J + 2]) / M) * mp.mpf(M) ** (-(J + 2))
        if best is None or omitted < best[1]:
            best = (J, omitted)
        if omitted < eps:
            break
    return best


def _tail_expansion(r: int, ctx: PrecisionCtx, eps: Real) -> Tuple[List[Real], List[Real], Real]:
    """Asymptotic coefficients alpha_j of zeta_{n-1}({2}_{r-1})  ~ sum alpha_j n^(-j),
    the remainders rho_n for n <= M, and a bound on sum_{n>M} |rho_n| / n^2.

    Each level follows T_m(n) = zeta({2}_m) - sum_{k>=n} T_{m-1}(k)/k^2 with the
    Euler-Maclaurin expansion of sum_{k>=n} k^(-s). The split index M grows
    until the first omitted expansion term falls below eps.
    """
    key = ('mpl_expansion', r, ctx.mp.prec)
    cached = ctx.cache.get(key)
    if cached is not None:
        return cached
    mp = ctx.mp
    size = MPL_MAX_EXPANSION + 3
    alpha = [mp.one] + [mp.zero] * (size - 1)
    for level in range(1, r):
        new = [mp.zero] * size
        new[0] = zeta_2r_newton(level, ctx)
        for j, a in enumerate(alpha):
            if a == 0:
                continue
            s = j + 2
            if j + 1 < size:
                new[j + 1] -= a / (s - 1)
            if j + 2 < size:
                new[j + 2] -= a / 2
            p = 1
            while j + 1 + 2 * p < size:
                rising = 1
                for i in range(2 * p - 1):
                    rising *= s + i
                coeff = bernoulli(2 * p) * rising / factorial(2 * p)
                new[j + 1 + 2 * p] -= a * ctx.real(coeff)
                p += 1
        alpha = new
    for M in MPL_SPLIT_INDICES:
        order, remainder = _expansion_order(alpha, M, eps, mp)
        if remainder < eps:
            break
    else:
        logger.warning(
            f"Asymptotic expansion for depth {r} stops at {mp.nstr(remainder, 5)} "
            f"(order {order}, split {M}); target {mp.nstr(eps, 5)}"
        )
    alpha = alpha[:order + 1]
    plain = _mpl_coefficients(r, M, ctx)
    rho = []
    for n in range(1, M + 1):
        t_n = plain[n - 1] * n * n
        rho.append(t_n - sum(a * mp.mpf(n) ** (-j) for j, a in enumerate(alpha)))
    return ctx.cache.put(key, (alpha, rho, remainder))


def mpl_2r(r: int, x: Number, ctx: PrecisionCtx) -> Real:
    """Li_{{2}_r}(x) = sum_{n>=1} zeta_{n-1}({2}_{r-1}) x^n / n^2 for x in [0, 1].

    Small arguments are summed directly. For x > 1/2 the coefficients are
    split into their asymptotic expansion, which sums to polylogarithms,
    and a rapidly decaying remainder.
    """
    if not is_integer(r) or r < 1:
        raise UsageError(f"r must be an integer >= 1, got {r}")
    r = int(r)
    mp = ctx.mp
    value = ctx.real(x)
    if value < 0 or value > 1:
        raise DomainError(f"mpl_2r argument {x} lies outside [0, 1]")
    if value == 0:
        return mp.zero
    eps = ctx.eps * mp.ldexp(1, -8)
    with ctx.workprec():
        v = ctx.real(x)
        if v <= mp.mpf(1) / 2:
            bound = zeta_2r_newton(r - 1, ctx)
            count = 32
            while True:
                coeffs = _mpl_coefficients(r, count, ctx)
                total = mp.zero
                power = mp.one
                for n, c in enumerate(coeffs, start=1):
                    power *= v
                    total += c * power
                    if bound * power * v / ((n + 1) ** 2 * (1 - v)) < eps:
                        break
                else:
                    count *= 2
                    continue
                break
            result = total
        else:
            alpha, rho, _ = _tail_expansion(r, ctx, eps)
            result = mp.zero
            for j, a in enumerate(alpha):
                if a != 0:
                    result += a * polylog(j + 2, v, ctx)
            power = mp.one
            for n, rn in enumerate(rho, start=1):
                power *= v
                result += rn * power / (n * n)
    return +result


def mpl_2r_remainder(r: int, ctx: PrecisionCtx) -> Real:
    """Bound on the coefficients mpl_2r drops past its split index for x > 1/2"""
    if not is_integer(r) or r < 1:
        raise UsageError(f"r must be an integer >= 1, got {r}")
    mp = ctx.mp
    eps = ctx.eps * mp.ldexp(1, -8)
    with ctx.workprec():
        _, _, remainder = _tail_expansion(int(r), ctx, eps)
    return +remainder
