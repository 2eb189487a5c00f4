"""
Shared fixtures: precision contexts for the library and an mpmath oracle
working at a fixed decimal precision.
"""
import logging
import sys
from fractions import Fraction

import mpmath
import pytest

from apery_verify.models.precision import PrecisionCtx

ORACLE_DPS = 60

logging.basicConfig(
    level=logging.WARNING,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)


def as_oracle(value) -> mpmath.mpf:
    """Move a value from a private context (or an exact rational) into the global mpmath context"""
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(str(value))


def close(value, expected, tol) -> bool:
    return abs(as_oracle(value) - as_oracle(expected)) < tol


@pytest.fixture(autouse=True)
def oracle_precision():
    with mpmath.workdps(ORACLE_DPS):
        yield


@pytest.fixture(scope='module')
def ctx():
    """256-bit context targeting 1e-30"""
    return PrecisionCtx.for_tolerance(Fraction(1, 10**30), 256)


@pytest.fixture(scope='module')
def fast_ctx():
    """Context for accelerated sums checked to 1e-10"""
    return PrecisionCtx.for_tolerance(Fraction(1, 10**12), 192)
