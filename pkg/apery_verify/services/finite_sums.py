"""
Exact finite nested sums: multiple harmonic (star) sums, Hurwitz and t-type
variants, harmonic numbers, Pochhammer symbols and the {2}_r tables.
"""
import logging
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from ..errors import DomainError, UsageError
from ..models.composition import Composition, SumTable2r
from ..models.precision import PrecisionCtx, Real

logger = logging.getLogger('finite-sums-service')

CompositionLike = Union[Composition, Sequence[int], int]


def _nested_sum(n: int, k: CompositionLike, alpha, strict: bool) -> Fraction:
    if n < 0:
        raise UsageError(f"upper index must be non-negative, got {n}")
    parts = Composition.of(k).parts
    shift = Fraction(alpha) - 1
    # cur[m]: sum over the deeper parts with every index <= m
    cur = [Fraction(1)] * (n + 1)
    for part in reversed(parts):
        new = [Fraction(0)] * (n + 1)
        for m in range(1, n + 1):
            den = m + shift
            if den == 0:
                raise DomainError(f"vanishing denominator at index {m} for alpha={alpha}")
            inner = cur[m - 1] if strict else cur[m]
            new[m] = new[m - 1] + inner / den ** part
        cur = new
    return cur[n]


def mhs(n: int, k: CompositionLike) -> Fraction:
    """Strict multiple harmonic sum zeta_n(k)"""
    return _nested_sum(n, k, 1, strict=True)


def mhss(n: int, k: CompositionLike) -> Fraction:
    """Multiple harmonic star sum zeta*_n(k)"""
    return _nested_sum(n, k, 1, strict=False)


def hurwitz_mhs(n: int, k: CompositionLike, alpha) -> Fraction:
    """Strict sum with every index shifted by alpha - 1"""
    return _nested_sum(n, k, alpha, strict=True)


def hurwitz_mhss(n: int, k: CompositionLike, alpha) -> Fraction:
    return _nested_sum(n, k, alpha, strict=False)


def t_sum(n: int, k: CompositionLike, star: bool = False) -> Fraction:
    """Multiple t-harmonic (star) sum: indices shifted by -1/2"""
    return _nested_sum(n, k, Fraction(1, 2), strict=not star)


def harmonic(n: int) -> Fraction:
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


def odd_harmonic(n: int) -> Fraction:
    """t_n = sum_{k<=n} 1/(k - 1/2)"""
    return sum((Fraction(2, 2 * j - 1) for j in range(1, n + 1)), Fraction(0))


def alt_harmonic(m: int) -> Fraction:
    """sum_{j<=m} (-1)^j / j; the alternating number with index 2n is alt_harmonic(2n)"""
    if m < 0:
        raise UsageError(f"index must be non-negative, got {m}")
    return sum((Fraction((-1) ** j, j) for j in range(1, m + 1)), Fraction(0))


def central_binomial_ratio(n: int) -> Fraction:
    """C(2n, n) / 4^n via b_n = b_{n-1} (2n-1)/(2n)"""
    if n < 0:
        raise UsageError(f"index must be non-negative, got {n}")
    b = Fraction(1)
    for j in range(1, n + 1):
        b = b * (2 * j - 1) / (2 * j)
    return b


def pochhammer(a, n: int):
    """Rising factorial (a)_n; the result has the kind of a"""
    if n < 0:
        raise UsageError(f"Pochhammer length must be non-negative, got {n}")
    result = a ** 0
    for j in range(n):
        result = result * (a + j)
    return result


def iter_rows_2r(R: int, ctx: Optional[PrecisionCtx] = None) -> Iterator[Tuple[int, List, List]]:
    """Stream (n, star_row, plain_row) for n = 0, 1, 2, ...

    star_row[r] = zeta*_n({2}_r) and plain_row[r] = zeta_n({2}_r) for r <= R.
    Without a context the rows are exact forever. With a context the rows
    are exact up to ctx.exact_switchover and yielded as Reals; past the
    switchover the recurrences continue in Real arithmetic.
    """
    if R < 0:
        raise UsageError(f"R must be non-negative, got {R}")
    star = [Fraction(1)] + [Fraction(0)] * R
    plain = [Fraction(1)] + [Fraction(0)] * R
    exact = True
    n = 0
    while True:
        if ctx is None:
            yield n, list(star), list(plain)
        elif exact:
            yield n, [ctx.real(v) for v in star], [ctx.real(v) for v in plain]
        else:
            yield n, list(star), list(plain)
        n += 1
        if exact and ctx is not None and n > ctx.exact_switchover:
            logger.debug(f"Switching {{2}}_r rows to Real arithmetic at n={n}")
            star = [ctx.real(v) for v in star]
            plain = [ctx.real(v) for v in plain]
            exact = False
        inv = Fraction(1, n * n) if exact else 1 / ctx.real(n * n)
        new_star = [star[0]]
        new_plain = [plain[0]]
        for r in range(1, R + 1):
            new_star.append(star[r] + inv * new_star[r - 1])
            new_plain.append(plain[r] + inv * plain[r - 1])
        star, plain = new_star, new_plain


def build_table_2r(N: int, R: int) -> SumTable2r:
    """Exact table of zeta*_n({2}_r) and zeta_n({2}_r) for n <= N, r <= R"""
    if N < 0 or R < 0:
        raise UsageError(f"N and R must be non-negative, got N={N}, R={R}")
    star_rows = []
    plain_rows = []
    for n, star, plain in iter_rows_2r(R):
        if n > N:
            break
        star_rows.append(tuple(star))
        plain_rows.append(tuple(plain))
    return SumTable2r(N=N, R=R, star_values=tuple(star_rows), plain_values=tuple(plain_rows))


def elementary_rows(k: int, weights) -> Iterator[List]:
    """Stream [e_0(n), ..., e_k(n)] for n = 0, 1, ... where
    e_i(n) = e_i(n-1) + u(n) e_{i-1}(n-1), the strict {1}_i sums over weights u
    """
    row = [weights(1) ** 0] + [0 * weights(1)] * k
    n = 0
    while True:
        yield list(row)
        n += 1
        u = weights(n)
        row = [row[0]] + [row[i] + u * row[i - 1] for i in range(1, k + 1)]


def complete_rows(k: int, weights) -> Iterator[List]:
    """Stream [h_0(n), ..., h_k(n)] with h_j(n) = h_j(n-1) + u(n) h_{j-1}(n), the star {1}_j sums"""
    row = [weights(1) ** 0] + [0 * weights(1)] * k
    n = 0
    while True:
        yield list(row)
        n += 1
        u = weights(n)
        new = [row[0]]
        for j in range(1, k + 1):
            new.append(row[j] + u * new[j - 1])
        row = new


def pochhammer_derivative_check(a, n: int, k: int, ctx: PrecisionCtx, kind: str = 'rising') -> Tuple[Real, Real]:
    """Compare a k-th derivative in a, taken by central differences, with its closed form.

    Args:
        a: non-integer rational parameter
        n (int): Pochhammer length
        k (int): derivative order, 0, 1 or 2
        ctx (PrecisionCtx): precision context
        kind (str): 'rising' for (a)_n, 'reciprocal' for 1/(1-a)_n

    Returns:
        tuple: (finite-difference value, closed-form value)
    """
    if k not in (0, 1, 2):
        raise UsageError(f"derivative order must be 0, 1 or 2, got {k}")
    if kind not in ('rising', 'reciprocal'):
        raise UsageError(f"unknown derivative kind '{kind}'")
    a = Fraction(a)
    if a.denominator == 1:
        raise DomainError(f"a must not be an integer, got {a}")
    mp = ctx.mp
    factorial_k = (1, 1, 2)[k]
    if kind == 'rising':
        def f(x):
            return pochhammer(x, n)
        closed = factorial_k * pochhammer(a, n) * hurwitz_mhs(n, Composition.repeated(1, k), a)
    else:
        def f(x):
            return 1 / pochhammer(1 - x, n)
        closed = Fraction(factorial_k) / pochhammer(1 - a, n) * hurwitz_mhss(n, Composition.repeated(1, k), 1 - a)
    with mp.extraprec(ctx.precision_bits):
        h = mp.ldexp(1, -(ctx.precision_bits // 3))
        x = ctx.real(a)
        if k == 0:
            numeric = f(x)
        elif k == 1:
            numeric = (f(x + h) - f(x - h)) / (2 * h)
        else:
            numeric = (f(x + h) - 2 * f(x) + f(x - h)) / (h * h)
    return +numeric, ctx.real(closed)
