"""
Verification runner: evaluates both sides of a catalog case, compares them
and turns the outcome into a VerificationReport.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Tuple

import mpmath

from ..errors import UsageError
from ..models.catalog import CaseKind, IdentityCase, RunConfig, Status, VerificationReport, format_param
from ..models.precision import DEFAULT_PRECISION_BITS, Number, PrecisionCtx
from ..models.storage import catalog
from .numeric_core import to_decimal_string
from .registry import initialize_catalog

logger = logging.getLogger('runner-service')

TARGET_FRACTION = Fraction(1, 100)
TOL_DIGITS = 6
UNAVAILABLE = 'nan'

# (case id, params, tol, precision bits, max terms, exact switchover)
PointJob = Tuple[str, Dict[str, Any], Optional[Fraction], int, Optional[int], Optional[int]]


def _as_tol(tol: Number) -> Fraction:
    try:
        value = tol if isinstance(tol, Fraction) else Fraction(str(tol))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"tol is not a number: '{tol}'")
    if value < 0:
        raise UsageError(f"tol must be positive, got {tol}")
    return value


def make_context(tol: Number, precision_bits: int = DEFAULT_PRECISION_BITS,
                 max_terms: Optional[int] = None, exact_switchover: Optional[int] = None) -> PrecisionCtx:
    """Context whose target error is a hundredth of the comparison tolerance"""
    options = {}
    if max_terms is not None:
        options['max_terms'] = max_terms
    if exact_switchover is not None:
        options['exact_switchover'] = exact_switchover
    return PrecisionCtx.for_tolerance(_as_tol(tol) * TARGET_FRACTION, precision_bits, **options)


def classify(abs_diff, tol, flagged: bool) -> Status:
    if flagged:
        return Status.TOLERANCE_NOT_REACHED
    if abs_diff > tol:
        return Status.FAIL
    return Status.PASS


def _render_tol(tol: Fraction, ctx: Optional[PrecisionCtx] = None) -> str:
    if tol == 0:
        return '0'
    mp = mpmath.mp if ctx is None else ctx.mp
    return mp.nstr(mp.mpf(tol.numerator) / tol.denominator, TOL_DIGITS)


def _rendered_params(params: Mapping[str, Any]) -> Dict[str, str]:
    return {name: format_param(value) for name, value in params.items()}


def _elapsed_ms(started: float) -> float:
    return round((time.perf_counter() - started) * 1000, 3)


def _failure(case: IdentityCase, params, tol: str, precision_bits: Optional[int], started: float, message: str) -> VerificationReport:
    return VerificationReport(
        id=case.id, params=_rendered_params(params), lhs=UNAVAILABLE, rhs=UNAVAILABLE, abs_diff=UNAVAILABLE,
        lhs_err=UNAVAILABLE, rhs_err=UNAVAILABLE, tol=tol, terms_used=0, wall_time_ms=_elapsed_ms(started),
        status=Status.FAIL, precision_bits=precision_bits, message=message,
    )


def _verify_exact(case: IdentityCase, params: Dict[str, Any], tol: str, started: float) -> VerificationReport:
    outcome = case.evaluate(params, None)
    status = Status.PASS if outcome.gap == 0 else Status.FAIL
    return VerificationReport(
        id=case.id, params=_rendered_params(params), lhs=format_param(outcome.lhs), rhs=format_param(outcome.rhs),
        abs_diff=format_param(outcome.gap), lhs_err='0', rhs_err='0', tol=tol, terms_used=outcome.terms_used,
        wall_time_ms=_elapsed_ms(started), status=status, precision_bits=None,
        message=None if status == Status.PASS else f"largest coefficient gap {format_param(outcome.gap)}",
    )


def verify(case_id: str, params: Optional[Mapping[str, Any]] = None, tol: Optional[Number] = None,
           precision_bits: int = DEFAULT_PRECISION_BITS, max_terms: Optional[int] = None,
           exact_switchover: Optional[int] = None) -> VerificationReport:
    """Evaluate both sides of one case and compare them.

    Args:
        case_id (str): catalog id such as 'I02'
        params (Mapping, optional): parameter overrides, raw strings or numbers
        tol (optional): comparison tolerance, the case default when omitted
        precision_bits (int): minimum working precision
        max_terms (int, optional): cap for accelerated summations
        exact_switchover (int, optional): index above which exact rows become Real

    Returns:
        VerificationReport: the comparison outcome

    Raises:
        UsageError: unknown id, unknown or out-of-range parameter, bad tolerance
    """
    initialize_catalog()
    case = catalog.require_case(case_id)
    resolved = case.resolve(params)
    started = time.perf_counter()
    tol = case.default_tol if tol is None else _as_tol(tol)
    if case.kind == CaseKind.EXACT:
        # only an exact zero gap passes; tol is reported as requested
        logger.info(f"Verifying {case.id} {_rendered_params(resolved)} exactly")
        try:
            return _verify_exact(case, resolved, _render_tol(tol), started)
        except UsageError:
            raise
        except Exception as e:
            logger.error(f"Error verifying {case.id}: {str(e)}")
            return _failure(case, resolved, _render_tol(tol), None, started, str(e))

    if tol == 0:
        raise UsageError(f"tol must be positive for the numeric case {case.id}")
    ctx = make_context(tol, precision_bits, max_terms, exact_switchover)
    tol_text = _render_tol(tol, ctx)
    logger.info(f"Verifying {case.id} {_rendered_params(resolved)} at tol {tol_text}, {ctx.precision_bits} bits")
    try:
        lhs, rhs = case.evaluate(resolved, ctx)
    except UsageError:
        raise
    except Exception as e:
        logger.error(f"Error verifying {case.id}: {str(e)}")
        return _failure(case, resolved, tol_text, ctx.precision_bits, started, str(e))

    abs_diff = abs(lhs.value - rhs.value)
    flagged = not (lhs.reached and rhs.reached)
    status = classify(abs_diff, ctx.real(tol), flagged)
    message = None
    if status == Status.TOLERANCE_NOT_REACHED:
        message = 'a summation stopped before reaching its target error'
        logger.warning(f"{case.id} {_rendered_params(resolved)}: {message}")
    elif status == Status.FAIL:
        message = f"sides differ by {ctx.mp.nstr(abs_diff, 5)}"
        logger.warning(f"{case.id} {_rendered_params(resolved)}: {message}")
    report = VerificationReport(
        id=case.id,
        params=_rendered_params(resolved),
        lhs=to_decimal_string(lhs.value, ctx),
        rhs=to_decimal_string(rhs.value, ctx),
        abs_diff=to_decimal_string(abs_diff, ctx),
        lhs_err=to_decimal_string(lhs.est_err, ctx),
        rhs_err=to_decimal_string(rhs.est_err, ctx),
        tol=tol_text,
        terms_used=lhs.terms_used + rhs.terms_used,
        wall_time_ms=_elapsed_ms(started),
        status=status,
        precision_bits=ctx.precision_bits,
        message=message,
    )
    logger.info(f"{case.id} finished with status {status.value} in {report.wall_time_ms} ms")
    return report


def _verify_point(job: PointJob) -> VerificationReport:
    case_id, params, tol, precision_bits, max_terms, exact_switchover = job
    return verify(case_id, params, tol, precision_bits, max_terms, exact_switchover)


def _plan(config: RunConfig) -> List[PointJob]:
    """Expand the selected cases into grid points, validating everything before any evaluation"""
    initialize_catalog()
    all_ids = [case.id for case in catalog.get_cases()]
    selected = {catalog.require_case(case_id).id for case_id in config.selected(all_ids)}
    cases = [catalog.require_case(case_id) for case_id in all_ids if case_id in selected]
    overrides = dict(config.overrides)
    unused = set(overrides) - {spec.name for case in cases for spec in case.params}
    if unused:
        raise UsageError(f"no selected case has parameter(s) {', '.join(sorted(unused))}")
    precision_bits = config.precision_bits or DEFAULT_PRECISION_BITS
    jobs = []
    for case in cases:
        names = {spec.name for spec in case.params}
        for point in case.grid:
            params = dict(point.params)
            params.update({k: v for k, v in overrides.items() if k in names})
            case.resolve(params)
            tol = config.tol if config.tol is not None else point.tol
            jobs.append((case.id, params, tol, precision_bits, config.max_terms, config.exact_switchover))
    return jobs


def run_suite(config: RunConfig) -> List[VerificationReport]:
    """Run every grid point of the selected cases, in catalog order"""
    jobs = _plan(config)
    logger.info(f"Running {len(jobs)} verifications with {config.jobs} worker(s)")
    if config.jobs == 1 or len(jobs) < 2:
        return [_verify_point(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        return list(pool.map(_verify_point, jobs))


def all_passed(reports: List[VerificationReport]) -> bool:
    return all(report.passed for report in reports)
