"""
Identity registry: every verifiable identity with its parameter space, default
grid, tolerance and the two evaluation routes that are compared.
"""
import itertools
import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Tuple

from ..errors import DomainError
from ..models.catalog import CaseKind, ExactOutcome, GridPoint, IdentityCase, ParamSpec
from ..models.hypergeometric import HypParams
from ..models.precision import PrecisionCtx
from ..models.series import DecayClass, StreamedTerms, SumMethod, SumResult, TermSeq, combine
from ..models.storage import catalog
from .exact_series import genfunc_lhs, genfunc_rhs, max_coefficient_gap
from .finite_sums import pochhammer_derivative_check
from .hypergeometric import (
    closed_3f2_x, cot_closed_form, eq43_series, functional_3f2, gauss_2f1_unit, hurwitz_param_apery,
    hyp_eval, param_apery, pf_3f2, quad_transform_check, single_sided_3f2, t_harmonic_apery,
)
from .mixed_values import eq34_check, eq35_check, mixed_lhs, mixed_rhs, t_relation_check
from .numeric_core import const
from .series_engine import apery_series, apery_series_family, apery_series_z, star_weighted_family, sum_adaptive
from .special_functions import digamma, mpl_2r, polylog, zeta_2r, zeta_2r_newton, zeta_int

logger = logging.getLogger('registry-service')

GEOMETRIC_TOL = Fraction(1, 10**25)
ALGEBRAIC_TOL = Fraction(1, 10**10)
LOG_WEIGHTED_TOL = Fraction(1, 10**6)
QUADRATURE_TOL = Fraction(1, 10**8)
FINITE_DIFFERENCE_TOL = Fraction(1, 10**12)
EXACT_TOL = Fraction(0)

X_SAMPLES = (Fraction(1, 10), Fraction(1, 4), Fraction(2, 5))
Z_SAMPLES = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
A_SAMPLES = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))
AB_SAMPLES = ((1, 1), (1, Fraction(3, 2)), (Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 3), Fraction(2, 3)))
MAX_SERIES_ORDER = 60


def _grid(tol=None, **axes: Iterable) -> Tuple[GridPoint, ...]:
    names = list(axes)
    return tuple(
        GridPoint(dict(zip(names, values)), tol)
        for values in itertools.product(*(tuple(axes[n]) for n in names))
    )


def _closed(value) -> SumResult:
    return SumResult.closed_form(value)


def _truncation_order(x: Fraction, tol: Fraction) -> int:
    """Smallest R with x^(2R+2) below tol/1000, the neglected part of an even series in x"""
    R = 0
    while x ** (2 * R + 2) >= tol / 1000 and R < MAX_SERIES_ORDER:
        R += 1
    return R


def _even_series(coefficients: List[SumResult], x: Fraction, ctx: PrecisionCtx) -> SumResult:
    parts = [c.scaled(ctx.real(x ** (2 * r))) for r, c in enumerate(coefficients)]
    return combine(sum((p.value for p in parts), ctx.mp.zero), parts, SumMethod.LEVIN_U)


def _apery_3f2(x) -> HypParams:
    return HypParams((1, 1, Fraction(3, 2)), (2 - x, 2 + x), 1)


# I01
def _zeta3_central_binomial(params: Dict[str, Any], ctx: PrecisionCtx):
    mp = ctx.mp

    def terms():
        binom = 1
        n = 1
        while True:
            binom = binom * (2 * n) * (2 * n - 1) // (n * n)
            sign = 1 if n % 2 else -1
            yield sign / (mp.mpf(n) ** 3 * binom)
            n += 1

    series = sum_adaptive(TermSeq(StreamedTerms(terms, 1), DecayClass.geometric(Fraction(1, 4))), ctx)
    return series.scaled(ctx.real(Fraction(5, 2))), _closed(zeta_int(3, ctx))


# I02
def _apery_zeta(params, ctx):
    r = params['r']
    if r == 0:
        rhs = 2 * const('log2', ctx)
    else:
        rhs = ctx.real(2 * (1 - Fraction(1, 4 ** r))) * zeta_int(2 * r + 1, ctx)
    return apery_series(r, ctx), _closed(rhs)


# I03
def _generating_function(params, ctx):
    n, R = params['n'], params['R']
    lhs = genfunc_lhs(n, R)
    rhs = genfunc_rhs(n, R)
    return ExactOutcome(lhs=lhs[R], rhs=rhs[R], gap=max_coefficient_gap(lhs, rhs), terms_used=n * (R + 1))


# I04
def _digamma_closed_form(params, ctx):
    x = params['x']
    return hyp_eval(_apery_3f2(x), ctx), _closed(closed_3f2_x(x, ctx))


# I05
def _quadratic_transformation(params, ctx):
    return quad_transform_check(params['a'], params['b'], params['c'], params['z'], ctx)


# I06
def _duplication(params, ctx):
    z = ctx.real(params['z'])
    log2 = const('log2', ctx)
    if params['form'] == 'duplication':
        lhs = digamma(z, ctx)
        rhs = 2 * digamma(2 * z, ctx) - digamma(z + ctx.mp.mpf(1) / 2, ctx) - 2 * log2
        return _closed(lhs), _closed(rhs)
    if abs(z) >= 1:
        raise DomainError(f"the digamma chain needs |x| < 1, got {params['z']}")
    half = ctx.mp.mpf(1) / 2
    lhs = (1 - z * z) * (
        digamma(1 - z * half, ctx) - digamma((1 - z) * half, ctx)
        + digamma(1 + z * half, ctx) - digamma((1 + z) * half, ctx)
    )
    return _closed(lhs), _closed(closed_3f2_x(params['z'], ctx))


# I07
def _zeta_expansion(params, ctx):
    x = params['x']
    R = _truncation_order(x, ALGEBRAIC_TOL)
    lhs = _even_series(apery_series_family(R, ctx), x, ctx)
    if params['form'] == 'hypergeometric':
        rhs = hyp_eval(_apery_3f2(x), ctx).scaled(ctx.real(1 / (2 * (1 - x * x))))
        return lhs, rhs
    total = 2 * const('log2', ctx)
    for n in range(1, R + 1):
        total += ctx.real(2 * (1 - Fraction(1, 4 ** n)) * x ** (2 * n)) * zeta_int(2 * n + 1, ctx)
    return lhs, _closed(total)


# I08
def _functional_form(params, ctx):
    x, t = params['x'], params['t']
    lhs = hyp_eval(HypParams((1, 1, Fraction(3, 2)), (2 - x, 2 + x), 1 - t), ctx)
    return lhs, functional_3f2(x, t, ctx)


# I09
def _polylog_form(params, ctx):
    r, z = params['r'], params['z']
    mp = ctx.mp
    root = mp.sqrt(ctx.real(z))
    rhs = -2 * polylog(2 * r + 1, (root - 1) / (root + 1), ctx)
    return apery_series_z(r, z, ctx), _closed(rhs)


# I10
def _mixed_values(params, ctx):
    r = params['r']
    return mixed_lhs(r, ctx), _closed(mixed_rhs(r, ctx))


# I11
def _zeta_twos(params, ctx):
    r = params['r']
    if params['form'] == 'newton':
        lhs = zeta_2r_newton(r, ctx)
    else:
        if r < 1:
            raise DomainError("the multiple polylogarithm route needs r >= 1")
        lhs = mpl_2r(r, 1, ctx)
    return _closed(lhs), _closed(zeta_2r(r, ctx))


# I12
def _central_binomial_generating(params, ctx):
    t = params['t']
    mp = ctx.mp
    if params['form'] == 'log' and t == 1:
        return apery_series(0, ctx), _closed(2 * const('log2', ctx))
    if t == 1:
        raise DomainError("1/sqrt(1-t) diverges at t = 1")
    with_index = params['form'] == 'log'

    def terms():
        cb = Fraction(1)
        power = mp.one
        n = 1 if with_index else 0
        if with_index:
            cb = Fraction(1, 2)
            power = ctx.real(t)
        while True:
            yield ctx.real(cb) * power / n if with_index else ctx.real(cb) * power
            n += 1
            cb = cb * (2 * n - 1) / (2 * n)
            power *= ctx.real(t)

    first = 1 if with_index else 0
    lhs = sum_adaptive(TermSeq(StreamedTerms(terms, first), DecayClass.geometric(t), first_index=first), ctx)
    root = mp.sqrt(1 - ctx.real(t))
    rhs = 2 * mp.log(2 / (1 + root)) if with_index else 1 / root
    return lhs, _closed(rhs)


# I13
def _reduced_integral(params, ctx):
    if params['form'] == 'eq35':
        return eq35_check(params['r'], ctx)
    return eq34_check(params['r'], ctx)


# I14
def _odd_harmonic_relation(params, ctx):
    return t_relation_check(params['r'], ctx)


# I16
def _partial_fractions(params, ctx):
    a, b, x = params['a'], params['b'], params['x']
    rhs = hyp_eval(HypParams((1, a, b), (2 - x, 2 + x), 1), ctx)
    return pf_3f2(a, b, x, ctx), rhs


# I17
def _single_sided(params, ctx):
    b, x = params['b'], params['x']
    return single_sided_3f2(b, x, ctx), pf_3f2(1, b, x, ctx)


# I18
def _single_sided_specialisations(params, ctx):
    b, x = Fraction(params['b']), params['x']
    lhs = single_sided_3f2(b, x, ctx)
    if b == Fraction(1, 2):
        return lhs, eq43_series(x, ctx)
    if b == 1:
        return lhs, _closed(cot_closed_form(x, ctx))
    return lhs, _closed(closed_3f2_x(x, ctx))


# I19
def _gauss_summation(params, ctx):
    a, b, c = params['a'], params['b'], params['c']
    return _closed(gauss_2f1_unit(a, b, c, ctx)), hyp_eval(HypParams((a, b), (c,), 1), ctx)


# I20
def _parametric_generating(params, ctx):
    a, x = params['a'], params['x']
    R = _truncation_order(x, ALGEBRAIC_TOL)
    lhs = _even_series(star_weighted_family(a, R, ctx), x, ctx)
    rhs = hyp_eval(HypParams((1, 1, 1 + a), (2 - x, 2 + x), 1), ctx).scaled(ctx.real(a / (1 - x * x)))
    return lhs, rhs


# I21
def _parametric_apery(params, ctx):
    return param_apery(params['a'], params['r'], ctx)


# I22
def _hurwitz_apery(params, ctx):
    return hurwitz_param_apery(params['a'], params['k'], params['r'], ctx)


# I23
def _t_harmonic_apery(params, ctx):
    return t_harmonic_apery(params['k'], params['r'], ctx)


# I24
def _pochhammer_derivatives(params, ctx):
    numeric, closed = pochhammer_derivative_check(params['a'], params['n'], params['k'], ctx, kind=params['kind'])
    return _closed(numeric), _closed(closed)


def _unit_open(name: str, default, description: str = '') -> ParamSpec:
    return ParamSpec(name, default, description, low=Fraction(0), high=Fraction(1), open_low=True, open_high=True)


def _symmetric_open(name: str, default, description: str = '') -> ParamSpec:
    return ParamSpec(name, default, description, low=Fraction(-1), high=Fraction(1), open_low=True, open_high=True)


def _integer(name: str, default: int, low: int, high: int, description: str = '') -> ParamSpec:
    return ParamSpec(name, default, description, low=Fraction(low), high=Fraction(high), integer=True)


def _bounded(name: str, default, low, high, description: str = '') -> ParamSpec:
    return ParamSpec(name, default, description, low=Fraction(low), high=Fraction(high))


def build_cases() -> List[IdentityCase]:
    """The catalog in id order; I15 is reserved"""
    return [
        IdentityCase(
            'I01', "Apery's series for zeta(3)",
            "zeta(3) = (5/2) sum_{n>=1} (-1)^(n-1) / (n^3 C(2n,n))",
            _zeta3_central_binomial, GEOMETRIC_TOL,
        ),
        IdentityCase(
            'I02', 'Central-binomial series with {2}_r star sums',
            "sum_{n>=1} C(2n,n)/(n 4^n) zeta*_n({2}_r) = 2(1-4^-r) zeta(2r+1); r = 0 gives 2 log 2",
            _apery_zeta, ALGEBRAIC_TOL,
            params=(_integer('r', 1, 0, 8, 'depth'),),
            grid=_grid(r=range(0, 5)),
        ),
        IdentityCase(
            'I03', 'Generating function of the {2}_r star sums (exact)',
            "sum_r zeta*_n({2}_r) x^(2r) = prod_{j<=n} (1 - x^2/j^2)^(-1), coefficientwise to order R",
            _generating_function, EXACT_TOL, kind=CaseKind.EXACT,
            params=(_integer('n', 25, 0, 60, 'upper index'), _integer('R', 40, 0, 60, 'truncation order')),
            grid=_grid(n=range(0, 26), R=(40,)),
        ),
        IdentityCase(
            'I04', 'Digamma closed form of 3F2(1,1,3/2; 2-x,2+x; 1)',
            "3F2(1,1,3/2; 2-x,2+x; 1) = 4 log2 (1-x^2) + 2(1-x^2)(psi(1-x/2)+psi(1+x/2)) - 2(1-x^2)(psi(1-x)+psi(1+x))",
            _digamma_closed_form, ALGEBRAIC_TOL,
            params=(_symmetric_open('x', Fraction(1, 4)),),
            grid=_grid(x=X_SAMPLES),
        ),
        IdentityCase(
            'I05', 'Quadratic transformation of 3F2',
            "3F2(a,b,c; 1+a-b,1+a-c; z) = (1-z)^(-a) 3F2(a-b-c+1, a/2, (a+1)/2; 1+a-b,1+a-c; -4z/(1-z)^2)",
            _quadratic_transformation, GEOMETRIC_TOL,
            params=(
                _bounded('a', 2, -10, 10), _bounded('b', Fraction(6, 5), -10, 10),
                _bounded('c', Fraction(4, 5), -10, 10), _bounded('z', Fraction(-1, 2), -1, 0),
            ),
            grid=(
                GridPoint({'a': 2, 'b': Fraction(6, 5), 'c': Fraction(4, 5), 'z': Fraction(-1, 2)}),
                GridPoint({'a': 1, 'b': Fraction(1, 3), 'c': Fraction(1, 4), 'z': Fraction(-1, 3)}),
                GridPoint({'a': 2, 'b': Fraction(13, 10), 'c': Fraction(7, 10), 'z': -1}, ALGEBRAIC_TOL),
            ),
        ),
        IdentityCase(
            'I06', 'Digamma duplication and the derivation chain',
            "psi(z) = 2 psi(2z) - psi(z+1/2) - 2 log 2; "
            "(1-x^2)(psi(1-x/2) - psi((1-x)/2) + psi(1+x/2) - psi((1+x)/2)) = 3F2(1,1,3/2; 2-x,2+x; 1)",
            _duplication, GEOMETRIC_TOL,
            params=(
                ParamSpec('form', 'duplication', choices=('duplication', 'chain')),
                ParamSpec('z', Fraction(1, 3), 'argument (x for the chain form)', low=Fraction(-1), high=Fraction(10), open_low=True),
            ),
            grid=_grid(form=('duplication',), z=(Fraction(1, 3), Fraction(1, 2), Fraction(5, 4)))
            + _grid(form=('chain',), z=X_SAMPLES),
        ),
        IdentityCase(
            'I07', 'Zeta expansion of the 3F2 generating function',
            "sum_r S_r x^(2r) = 3F2(1,1,3/2; 2-x,2+x; 1) / (2(1-x^2)) = 2 log 2 + 2 sum_{n>=1} (1-4^-n) zeta(2n+1) x^(2n)",
            _zeta_expansion, ALGEBRAIC_TOL,
            params=(
                ParamSpec('x', Fraction(1, 4), low=Fraction(0), high=Fraction(3, 4), open_low=True),
                ParamSpec('form', 'series', choices=('series', 'hypergeometric')),
            ),
            grid=_grid(x=(Fraction(1, 4), Fraction(1, 2)), form=('series', 'hypergeometric')),
        ),
        IdentityCase(
            'I08', 'Functional form at argument 1-t',
            "3F2(1,1,3/2; 2-x,2+x; 1-t) = 2(1-x^2)/(1-t) sum_{n>=1} w^n (1/(x-n) - 1/(x+n)), w = (sqrt t - 1)/(sqrt t + 1)",
            _functional_form, GEOMETRIC_TOL,
            params=(_symmetric_open('x', Fraction(1, 3)), _unit_open('t', Fraction(1, 4))),
            grid=_grid(x=(0, Fraction(1, 3), Fraction(2, 5)), t=Z_SAMPLES),
        ),
        IdentityCase(
            'I09', 'Central-binomial series with (1-z)^n and polylogarithms',
            "sum_{n>=1} C(2n,n)/(n 4^n) zeta*_n({2}_r) (1-z)^n = -2 Li_{2r+1}((sqrt z - 1)/(sqrt z + 1))",
            _polylog_form, GEOMETRIC_TOL,
            params=(
                _integer('r', 1, 0, 12),
                ParamSpec('z', Fraction(1, 4), low=Fraction(0), high=Fraction(1), open_low=True),
            ),
            grid=_grid(r=range(0, 5), z=Z_SAMPLES),
        ),
        IdentityCase(
            'I10', 'Mixed values with alternating harmonic numbers',
            "sum_{n>=1} H'_{2n} zeta_{n-1}({2}_{r-1}) / n^2 = sum_{j=1..r} (-1)^j (1-4^-j) zeta({2}_{r-j}) zeta(2j+1), "
            "H'_{2n} = sum_{j<=2n} (-1)^j/j",
            _mixed_values, LOG_WEIGHTED_TOL,
            params=(_integer('r', 1, 1, 8),),
            grid=_grid(r=range(1, 5)),
        ),
        IdentityCase(
            'I11', 'Closed form of zeta({2}_r)',
            "zeta({2}_r) = pi^(2r) / (2r+1)!, checked through Newton's identities and through Li_{{2}_r}(1)",
            _zeta_twos, GEOMETRIC_TOL,
            params=(_integer('r', 1, 0, 12), ParamSpec('form', 'newton', choices=('newton', 'series'))),
            grid=_grid(r=(0,), form=('newton',)) + _grid(r=range(1, 5), form=('newton', 'series')),
        ),
        IdentityCase(
            'I12', 'Central-binomial generating functions',
            "sum_{n>=0} C(2n,n) t^n / 4^n = 1/sqrt(1-t); sum_{n>=1} C(2n,n) t^n / (n 4^n) = 2 log(2/(1+sqrt(1-t))), = 2 log 2 at t = 1",
            _central_binomial_generating, GEOMETRIC_TOL,
            params=(
                ParamSpec('t', Fraction(1, 2), low=Fraction(0), high=Fraction(1), open_low=True),
                ParamSpec('form', 'log', choices=('inverse_sqrt', 'log')),
            ),
            grid=_grid(t=Z_SAMPLES, form=('inverse_sqrt', 'log')) + _grid(ALGEBRAIC_TOL, t=(1,), form=('log',)),
        ),
        IdentityCase(
            'I13', 'Reduced integral and double-sum forms',
            "sum_{j=1..r+1} (-1)^(j+1) zeta({2}_{r-j+1}) S_{j-1} = 2 int_0^1 Li_{{2}_r}(t^2)/(1+t) dt; "
            "2 sum_n H'_{2n} zeta_{n-1}({2}_{r-1}) / n^2 = 2 int_0^1 Li_{{2}_r}(t^2)/(1+t) dt - 2 zeta({2}_r) log 2",
            _reduced_integral, QUADRATURE_TOL,
            params=(_integer('r', 1, 1, 6), ParamSpec('form', 'eq34', choices=('eq34', 'eq35'))),
            grid=_grid(r=range(1, 4), form=('eq34', 'eq35')),
        ),
        IdentityCase(
            'I14', 'Odd harmonic against harmonic weighted series',
            "sum t_n zeta_{n-1}({2}_{r-1}) / n^2 = sum H_n zeta_{n-1}({2}_{r-1}) / n^2 "
            "- 2 sum_{j=1..r} (-1)^j (1-4^-j) zeta({2}_{r-j}) zeta(2j+1)",
            _odd_harmonic_relation, LOG_WEIGHTED_TOL,
            params=(_integer('r', 1, 1, 8),),
            grid=_grid(r=range(1, 5)),
        ),
        IdentityCase(
            'I16', 'Partial-fraction representation of 3F2(1,a,b; 2-x,2+x; 1)',
            "3F2(1,a,b; 2-x,2+x; 1) = (x^2-1) sum_{k != 0} (-1)^k/(x+k) (a)_{|k|-1} (b)_{|k|-1} sign(k)|k| "
            "Gamma(3-a-b) / (Gamma(2+|k|-a) Gamma(2+|k|-b))",
            _partial_fractions, ALGEBRAIC_TOL,
            params=(
                _bounded('a', 1, -5, 5), _bounded('b', 1, -5, 5), _symmetric_open('x', Fraction(1, 4)),
            ),
            grid=tuple(
                GridPoint({'a': a, 'b': b, 'x': x}) for (a, b) in AB_SAMPLES for x in X_SAMPLES
            ),
        ),
        IdentityCase(
            'I17', 'Single-sided partial fractions at a = 1',
            "3F2(1,1,b; 2-x,2+x; 1) = (x^2-1) sum_{k>=1} (-1)^k (b)_{k-1}/(2-b)_k (1/(x+k) - 1/(x-k))",
            _single_sided, GEOMETRIC_TOL,
            params=(
                ParamSpec('b', Fraction(1, 2), low=Fraction(-5), high=Fraction(2), open_high=True),
                _symmetric_open('x', Fraction(1, 4)),
            ),
            grid=_grid(b=(Fraction(1, 2), 1, Fraction(3, 2)), x=(Fraction(1, 4), Fraction(2, 5))),
        ),
        IdentityCase(
            'I18', 'Single-sided form at b = 1/2, 1, 3/2',
            "b = 1/2: (x^2-1) sum (-1)^k k/((k^2-1/4)(k^2-x^2)); b = 1: ((x^2-1)/x)(1/x - pi/sin(pi x)); "
            "b = 3/2: the digamma closed form",
            _single_sided_specialisations, GEOMETRIC_TOL,
            params=(
                ParamSpec('b', '1/2', choices=('1/2', '1', '3/2')),
                _symmetric_open('x', Fraction(1, 4)),
            ),
            grid=_grid(b=('1/2', '1', '3/2'), x=X_SAMPLES),
        ),
        IdentityCase(
            'I19', "Gauss's summation theorem",
            "2F1(a,b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)), c-a-b > 0",
            _gauss_summation, ALGEBRAIC_TOL,
            params=(
                _bounded('a', Fraction(1, 2), -10, 10), _bounded('b', Fraction(1, 2), -10, 10),
                _bounded('c', 2, -10, 10),
            ),
            grid=(
                GridPoint({'a': -1, 'b': 2, 'c': 5}),
                GridPoint({'a': Fraction(1, 2), 'b': Fraction(1, 2), 'c': 2}),
                GridPoint({'a': Fraction(3, 10), 'b': Fraction(2, 5), 'c': 2}),
            ),
        ),
        IdentityCase(
            'I20', 'Parametric generating function',
            "sum_r (sum_n (a)_n/(n! n) zeta*_n({2}_r)) x^(2r) = a/(1-x^2) 3F2(1,1,1+a; 2-x,2+x; 1)",
            _parametric_generating, ALGEBRAIC_TOL,
            params=(_unit_open('a', Fraction(1, 2)), ParamSpec('x', Fraction(1, 4), low=Fraction(0), high=Fraction(3, 4), open_low=True)),
            grid=(GridPoint({'a': Fraction(1, 2), 'x': Fraction(1, 4)}), GridPoint({'a': Fraction(1, 3), 'x': Fraction(1, 4)})),
        ),
        IdentityCase(
            'I21', 'Parametric Apery-like series',
            "sum_n (a)_n/(n! n) zeta*_n({2}_r) = 2 sum_n (-1)^(n-1) (a)_n/(1-a)_n / n^(2r+1)",
            _parametric_apery, ALGEBRAIC_TOL,
            params=(_unit_open('a', Fraction(1, 3)), _integer('r', 1, 0, 8)),
            grid=_grid(a=A_SAMPLES, r=range(0, 3)),
        ),
        IdentityCase(
            'I22', 'Hurwitz-type parametric series',
            "sum_n (a)_n/(n! n) zeta*_n({2}_r) zeta_n({1}_k; a) = "
            "2 sum_{i+j=k} sum_n (-1)^(n-1)/n^(2r+1) (a)_n/(1-a)_n zeta_n({1}_i; a) zeta*_n({1}_j; 1-a)",
            _hurwitz_apery, LOG_WEIGHTED_TOL,
            params=(_unit_open('a', Fraction(1, 3)), _integer('k', 1, 0, 3), _integer('r', 1, 0, 6)),
            grid=_grid(a=A_SAMPLES, k=range(0, 3), r=range(0, 3)),
        ),
        IdentityCase(
            'I23', 't-harmonic Apery-like series',
            "sum_n C(2n,n)/(n 4^n) zeta*_n({2}_r) t_n({1}_k) = 2 sum_{i+j=k} sum_n (-1)^(n-1)/n^(2r+1) t_n({1}_i) t*_n({1}_j)",
            _t_harmonic_apery, LOG_WEIGHTED_TOL,
            params=(_integer('k', 1, 0, 3), _integer('r', 1, 0, 6)),
            grid=_grid(k=range(0, 3), r=range(0, 3)),
        ),
        IdentityCase(
            'I24', 'Pochhammer derivative relations',
            "d^k/da^k (a)_n = k! (a)_n zeta_n({1}_k; a); d^k/da^k 1/(1-a)_n = k!/(1-a)_n zeta*_n({1}_k; 1-a)",
            _pochhammer_derivatives, FINITE_DIFFERENCE_TOL,
            params=(
                _bounded('a', Fraction(1, 3), -5, 5), _integer('n', 6, 0, 40), _integer('k', 1, 0, 2),
                ParamSpec('kind', 'rising', choices=('rising', 'reciprocal')),
            ),
            grid=_grid(a=A_SAMPLES, n=(6,), k=range(0, 3), kind=('rising', 'reciprocal')),
        ),
    ]


def initialize_catalog() -> None:
    """Populate the shared catalog once"""
    if not catalog.is_empty():
        return
    for case in build_cases():
        catalog.add_case(case)
    logger.debug(f"Registered {len(catalog.get_cases())} identity cases")


def list_cases() -> List[Dict[str, Any]]:
    initialize_catalog()
    return [case.summary() for case in catalog.get_cases()]
