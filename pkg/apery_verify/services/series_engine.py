"""
Series engine: adaptive summation with error control per decay class, and the
central-binomial series built on the {2}_r star sums.
"""
import logging
from dataclasses import replace
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from ..errors import DomainError, UsageError
from ..models.precision import Number, PrecisionCtx, Real, guard_bits
from ..models.series import DecayClass, DecayKind, StreamedTerms, SumMethod, SumResult, TermSeq
from .acceleration import CVZ_EXTRA_ORDERS, LEVIN_MAX_ORDER, LevinAccumulator, cvz_bound, cvz_order_for, cvz_sum
from .finite_sums import iter_rows_2r
from .special_functions import zeta_star_2r

logger = logging.getLogger('series-engine-service')

RATIO_CHECK_WARMUP = 16
BY_PARTS_INNER_FACTOR = Fraction(1, 10**4)


class _Memo:
    """Caches term(n) so summation by parts can revisit earlier terms"""

    def __init__(self, fn: Callable[[int], Real]):
        self._fn = fn
        self._values: Dict[int, Real] = {}

    def __call__(self, n: int) -> Real:
        if n not in self._values:
            self._values[n] = self._fn(n)
        return self._values[n]


class _TailSums:
    """tail(m) = total - sum_{start <= i < m} g(i), extended incrementally"""

    def __init__(self, g: Callable[[int], Real], total: Real, start: int = 1):
        self._g = g
        self._total = total
        self._start = start
        self._prefix = [0 * total]

    def __call__(self, m: int) -> Real:
        i = m - self._start
        while len(self._prefix) <= i:
            n = self._start + len(self._prefix) - 1
            self._prefix.append(self._prefix[-1] + self._g(n))
        return self._total - self._prefix[i]


def _rounding_err(total, ctx: PrecisionCtx, n_terms: int) -> Real:
    return ctx.mp.ldexp(abs(total) + 1, -ctx.precision_bits) * max(n_terms, 1)


def _sum_finite(seq: TermSeq, ctx: PrecisionCtx) -> SumResult:
    mp = ctx.mp
    last = seq.decay.last_index
    with ctx.workprec(max(last - seq.first_index + 1, 1)):
        total = mp.zero
        for n in range(seq.first_index, last + 1):
            total += seq.term(n)
    count = max(last - seq.first_index + 1, 0)
    return SumResult(value=+total, est_err=_rounding_err(total, ctx, count), terms_used=count, method=SumMethod.FINITE)


def _sum_geometric(seq: TermSeq, ctx: PrecisionCtx, target: Real) -> SumResult:
    mp = ctx.mp
    with ctx.workprec(ctx.geometric_max_terms):
        q_bound = ctx.real(seq.decay.ratio_bound)
        total = mp.zero
        previous = None
        count = 0
        n = seq.first_index
        reached = False
        tail = mp.inf
        while True:
            term = seq.term(n)
            total += term
            count += 1
            q = q_bound
            if previous is not None and previous != 0:
                observed = abs(term / previous)
                if observed > q:
                    if count > RATIO_CHECK_WARMUP and observed > q * (1 + mp.mpf(10) ** -12):
                        logger.debug(f"Term ratio {mp.nstr(observed, 8)} exceeds the declared bound at n={n}")
                    if observed < 1:
                        q = observed
            tail = abs(term) * q / (1 - q)
            if tail < target:
                reached = True
                break
            if count >= ctx.geometric_max_terms:
                logger.warning(f"Geometric sum stopped at {count} terms with tail {mp.nstr(tail, 5)}")
                break
            previous = term
            n += 1
        est_err = tail + _rounding_err(total, ctx, count)
    return SumResult(value=+total, est_err=+est_err, terms_used=count, method=SumMethod.DIRECT,
                     reached=reached, rigorous_bound=+est_err)


def _sum_algebraic(seq: TermSeq, ctx: PrecisionCtx, target: Real) -> SumResult:
    mp = ctx.mp
    limit = min(ctx.max_terms, LEVIN_MAX_ORDER)
    with mp.workprec(2 * ctx.precision_bits + guard_bits(limit)):
        acc = LevinAccumulator(mp, seq.first_index, target)
        n = seq.first_index
        while not acc.done and acc.terms_used < limit:
            acc.push(seq.term(n))
            n += 1
        value, err, reached = acc.result()
    method = SumMethod.PARTIAL if acc.best is None else SumMethod.LEVIN_U
    if not reached:
        logger.warning(f"Levin transform reached {mp.nstr(err, 5)} after {acc.terms_used} terms (target {mp.nstr(target, 5)})")
    return SumResult(value=+value, est_err=+err, terms_used=acc.terms_used, method=method, reached=reached)


def _sum_alternating(seq: TermSeq, ctx: PrecisionCtx, target: Real) -> SumResult:
    mp = ctx.mp
    with ctx.workprec():
        magnitudes: List[Real] = []

        def extend(count):
            while len(magnitudes) < count:
                k = len(magnitudes)
                sign = 1 if k % 2 == 0 else -1
                magnitudes.append(sign * seq.term(seq.first_index + k))

        extend(1)
        leading = abs(magnitudes[0])
        n = min(cvz_order_for(target, leading), max(ctx.max_terms - CVZ_EXTRA_ORDERS, 1))
        while True:
            extend(n + CVZ_EXTRA_ORDERS)
            low = cvz_sum(magnitudes[:n], mp)
            high = cvz_sum(magnitudes[:n + CVZ_EXTRA_ORDERS], mp)
            err = max(abs(high - low), cvz_bound(n + CVZ_EXTRA_ORDERS, leading, mp))
            reached = err < target
            if reached or n + CVZ_EXTRA_ORDERS >= ctx.max_terms:
                break
            n = min(int(n * 1.5) + 1, ctx.max_terms - CVZ_EXTRA_ORDERS)
    if not reached:
        logger.warning(f"Alternating acceleration reached {mp.nstr(err, 5)} with {n + CVZ_EXTRA_ORDERS} terms")
    return SumResult(value=+high, est_err=+err, terms_used=n + CVZ_EXTRA_ORDERS, method=SumMethod.CVZ, reached=reached)


def _weight_mass(u: Callable[[int], Real], count: int) -> Real:
    """sum_{m=1..count} |u(m)|"""
    return sum(abs(u(m)) for m in range(1, count + 1))


def _sum_by_parts(seq: TermSeq, ctx: PrecisionCtx, target: Real) -> SumResult:
    """sum c(n) e_k(n; u) reduced to k + 1 pure-power sums.

    With T(m) = sum_{n>=m} c(n), one summation by parts gives
    sum_m u(m) T(m) e_{k-1}(m-1); further levels shift the tail index by one.
    Every level is summed with the Levin transform.
    """
    k = seq.decay.log_power
    exponent = seq.decay.exponent
    if k == 0:
        return _sum_algebraic(replace(seq, decay=DecayClass.algebraic(exponent)), ctx, target)
    if seq.weights is None:
        raise UsageError("the algebraic_log class needs the weight sequence u(m)")
    weights = seq.weights
    u = _Memo(lambda m: ctx.real(weights(m)))
    first = seq.first_index
    inner_target = target * ctx.real(BY_PARTS_INNER_FACTOR)
    c = _Memo(seq.term)
    base = _sum_algebraic(TermSeq(c, DecayClass.algebraic(exponent), first), ctx, inner_target)
    levels = [base]
    carried = base.est_err

    def c_full(n: int) -> Real:
        return c(n) if n >= first else 0 * base.value

    tail = _TailSums(c_full, base.value, start=1)
    g = _Memo(lambda m, tail=tail: u(m) * tail(m))
    for level in range(1, k + 1):
        level_target = target / 2 if level == k else inner_target
        result = _sum_algebraic(TermSeq(g, DecayClass.algebraic(exponent), 1), ctx, level_target)
        # an error d in the previous total shifts every tail by d
        carried = result.est_err + carried * _weight_mass(u, result.terms_used + 1)
        levels.append(result)
        if level < k:
            tail = _TailSums(g, result.value, start=1)
            g = _Memo(lambda m, tail=tail: u(m) * tail(m + 1))
    final = levels[-1]
    reached = final.reached and carried < target
    if not reached:
        logger.warning(f"Summation by parts carries an error of {ctx.mp.nstr(carried, 5)} (target {ctx.mp.nstr(target, 5)})")
    return SumResult(
        value=final.value,
        est_err=+carried,
        terms_used=sum(r.terms_used for r in levels),
        method=SumMethod.SUMMATION_BY_PARTS,
        reached=reached,
    )


def sum_adaptive(seq: TermSeq, ctx: PrecisionCtx, target: Optional[Real] = None) -> SumResult:
    """Sum a term sequence to ctx.target_abs_err (or target) according to its decay class.

    Args:
        seq (TermSeq): terms and their decay class
        ctx (PrecisionCtx): precision context
        target (Real, optional): absolute error goal, defaults to ctx.target_abs_err

    Returns:
        SumResult: value with its error estimate; reached is False when the
        term cap was hit before the goal
    """
    target = ctx.eps if target is None else ctx.real(target)
    kind = seq.decay.kind
    logger.debug(f"Summing {kind.value} series from n={seq.first_index}")
    if kind == DecayKind.FINITE:
        return _sum_finite(seq, ctx)
    if kind == DecayKind.GEOMETRIC:
        return _sum_geometric(seq, ctx, target)
    if kind == DecayKind.ALGEBRAIC:
        return _sum_algebraic(seq, ctx, target)
    if kind == DecayKind.ALTERNATING:
        return _sum_alternating(seq, ctx, target)
    if kind == DecayKind.ALGEBRAIC_LOG:
        return _sum_by_parts(seq, ctx, target)
    raise UsageError(f"unknown decay class {kind}")


def star_weighted_family(a: Number, R: int, ctx: PrecisionCtx, target: Optional[Real] = None) -> List[SumResult]:
    """sum_n (a)_n/(n! n) zeta*_n({2}_r) for every r <= R from one pass over the rows.

    Each r keeps its own Levin accumulator, so the result for r does not
    depend on R. With a = 1/2 the weight (a)_n/n! is C(2n,n)/4^n exactly.
    """
    if R < 0:
        raise UsageError(f"R must be non-negative, got {R}")
    mp = ctx.mp
    target = ctx.eps if target is None else ctx.real(target)
    limit = min(ctx.max_terms, LEVIN_MAX_ORDER)
    exact = isinstance(a, (int, Fraction))
    a = Fraction(a) if exact else ctx.real(a)
    with mp.workprec(2 * ctx.precision_bits + guard_bits(limit)):
        accumulators = [LevinAccumulator(mp, 1, target) for _ in range(R + 1)]
        rows = iter_rows_2r(R, ctx)
        next(rows)
        coef = Fraction(1) if exact else mp.one
        for n, star, _ in rows:
            if isinstance(coef, Fraction):
                coef = coef * (a + n - 1) / n
                if n > ctx.exact_switchover:
                    coef = ctx.real(coef)
            else:
                coef = coef * ctx.real(a + n - 1) / n
            weight = ctx.real(coef) / n if isinstance(coef, Fraction) else coef / n
            for r, acc in enumerate(accumulators):
                if not acc.done:
                    acc.push(weight * star[r])
            if all(acc.done for acc in accumulators) or n >= limit:
                break
        outcomes = [acc.result() for acc in accumulators]
    results = []
    for acc, (value, err, reached) in zip(accumulators, outcomes):
        method = SumMethod.PARTIAL if acc.best is None else SumMethod.LEVIN_U
        results.append(SumResult(value=+value, est_err=+err, terms_used=acc.terms_used, method=method, reached=reached))
    return results


def tail_bound_cb(N: int, r: int, ctx: PrecisionCtx) -> Real:
    """Rigorous bound 2 zeta*({2}_r) / sqrt(pi N) on sum_{n>N} C(2n,n)/(n 4^n) zeta*_n({2}_r)"""
    if N < 1:
        raise UsageError(f"N must be at least 1, got {N}")
    mp = ctx.mp
    return 2 * zeta_star_2r(r, ctx) / (mp.sqrt(mp.pi) * mp.sqrt(N))


def _with_tail_bound(result: SumResult, r: int, ctx: PrecisionCtx) -> SumResult:
    return replace(result, rigorous_bound=tail_bound_cb(max(result.terms_used, 1), r, ctx))


def apery_series(r: int, ctx: PrecisionCtx) -> SumResult:
    """sum_{n>=1} C(2n,n)/(n 4^n) zeta*_n({2}_r), Levin-accelerated"""
    if r < 0:
        raise UsageError(f"r must be non-negative, got {r}")
    return _with_tail_bound(star_weighted_family(Fraction(1, 2), r, ctx)[r], r, ctx)


def apery_series_family(R: int, ctx: PrecisionCtx) -> List[SumResult]:
    """apery_series(r) for r = 0..R in a single pass"""
    return [_with_tail_bound(res, r, ctx) for r, res in enumerate(star_weighted_family(Fraction(1, 2), R, ctx))]


def apery_series_z(r: int, z: Number, ctx: PrecisionCtx) -> SumResult:
    """sum_{n>=1} C(2n,n)/(n 4^n) zeta*_n({2}_r) (1-z)^n for 0 < z <= 1"""
    if r < 0:
        raise UsageError(f"r must be non-negative, got {r}")
    mp = ctx.mp
    zr = Fraction(z) if isinstance(z, (int, Fraction)) else ctx.real(z)
    if not 0 < zr <= 1:
        raise DomainError(f"z must lie in (0, 1], got {z}")
    ratio = 1 - zr

    def terms():
        rows = iter_rows_2r(r, ctx)
        next(rows)
        cb = Fraction(1)
        power = mp.one
        q = ctx.real(ratio)
        for n, star, _ in rows:
            cb = cb * (2 * n - 1) / (2 * n)
            power *= q
            yield ctx.real(cb) * star[r] * power / n

    seq = TermSeq(StreamedTerms(terms, 1), DecayClass.geometric(ratio), first_index=1)
    return sum_adaptive(seq, ctx)
