"""
Catalog value types: identity cases, their parameter specs and grids,
verification reports and run configuration.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from ..errors import UsageError

REPORT_FIELDS = (
    'id', 'params', 'lhs', 'rhs', 'abs_diff', 'lhs_err', 'rhs_err', 'tol',
    'terms_used', 'wall_time_ms', 'status', 'precision_bits',
)
OUTPUT_FORMATS = ('json', 'csv', 'text')


class Status(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    TOLERANCE_NOT_REACHED = 'tolerance_not_reached'


class CaseKind(str, Enum):
    NUMERIC = 'numeric'
    EXACT = 'exact'


def format_param(value: Any) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


@dataclass(frozen=True)
class ParamSpec:
    """A named parameter with its admissible range or choices.

    Numeric values are parsed as exact rationals, so '0.3' and '3/10' are the
    same parameter value.
    """
    name: str
    default: Any
    description: str = ''
    low: Optional[Fraction] = None
    high: Optional[Fraction] = None
    open_low: bool = False
    open_high: bool = False
    integer: bool = False
    choices: Tuple[str, ...] = ()

    def parse(self, raw: Any) -> Any:
        if self.choices:
            value = str(raw).strip()
            if value not in self.choices:
                raise UsageError(f"parameter {self.name} must be one of {', '.join(self.choices)}, got '{raw}'")
            return value
        try:
            value = Fraction(raw) if isinstance(raw, (int, Fraction)) else Fraction(str(raw).strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"parameter {self.name} is not a number: '{raw}'")
        if self.integer:
            if value.denominator != 1:
                raise UsageError(f"parameter {self.name} must be an integer, got {raw}")
            value = int(value)
        if self.low is not None and (value < self.low or (self.open_low and value == self.low)):
            raise UsageError(f"parameter {self.name}={raw} is outside {self.range_text()}")
        if self.high is not None and (value > self.high or (self.open_high and value == self.high)):
            raise UsageError(f"parameter {self.name}={raw} is outside {self.range_text()}")
        return value

    def range_text(self) -> str:
        if self.choices:
            return '{' + ', '.join(self.choices) + '}'
        left = '(' if self.open_low else '['
        right = ')' if self.open_high else ']'
        low = '-inf' if self.low is None else format_param(self.low)
        high = 'inf' if self.high is None else format_param(self.high)
        return f"{left}{low}, {high}{right}"


@dataclass(frozen=True)
class GridPoint:
    params: Mapping[str, Any]
    tol: Optional[Fraction] = None


@dataclass(frozen=True)
class ExactOutcome:
    """Result of an exact-kind case: the highest compared coefficients and the largest gap"""
    lhs: Fraction
    rhs: Fraction
    gap: Fraction
    terms_used: int


@dataclass(frozen=True)
class IdentityCase:
    id: str
    description: str
    formula: str
    evaluate: Callable[[Dict[str, Any], Any], Any] = field(repr=False, compare=False)
    default_tol: Fraction = Fraction(1, 10**25)
    kind: CaseKind = CaseKind.NUMERIC
    params: Tuple[ParamSpec, ...] = ()
    grid: Tuple[GridPoint, ...] = (GridPoint({}),)

    def param(self, name: str) -> ParamSpec:
        for spec in self.params:
            if spec.name == name:
                return spec
        valid = ', '.join(p.name for p in self.params) or 'none'
        raise UsageError(f"{self.id} has no parameter '{name}' (valid: {valid})")

    def resolve(self, overrides: Optional[Mapping[str, Any]] = None) -> Dict[str, Any]:
        """Defaults overlaid with parsed overrides"""
        overrides = dict(overrides or {})
        for name in overrides:
            self.param(name)
        return {spec.name: spec.parse(overrides.get(spec.name, spec.default)) for spec in self.params}

    def summary(self) -> Dict[str, Any]:
        return {
            'id': self.id,
            'description': self.description,
            'formula': self.formula,
            'kind': self.kind.value,
            'default_tol': format_param(self.default_tol),
            'params': {spec.name: {'default': format_param(spec.default), 'range': spec.range_text()} for spec in self.params},
            'grid_points': len(self.grid),
        }


@dataclass(frozen=True)
class VerificationReport:
    id: str
    params: Dict[str, str]
    lhs: str
    rhs: str
    abs_diff: str
    lhs_err: str
    rhs_err: str
    tol: str
    terms_used: int
    wall_time_ms: float
    status: Status
    precision_bits: Optional[int]
    message: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == Status.PASS

    def to_record(self) -> Dict[str, Any]:
        """The serialised field set, in documented order, numbers as decimal strings.

        Exact comparisons carry no working precision, so precision_bits is None.
        """
        record = {name: getattr(self, name) for name in REPORT_FIELDS}
        record['status'] = self.status.value
        record['params'] = dict(self.params)
        record['terms_used'] = str(self.terms_used)
        record['wall_time_ms'] = str(self.wall_time_ms)
        record['precision_bits'] = None if self.precision_bits is None else str(self.precision_bits)
        return record


@dataclass(frozen=True)
class RunConfig:
    ids: Optional[Tuple[str, ...]] = None
    overrides: Mapping[str, str] = field(default_factory=dict)
    precision_bits: Optional[int] = None
    tol: Optional[Fraction] = None
    max_terms: Optional[int] = None
    exact_switchover: Optional[int] = None
    jobs: int = 1
    output_format: str = 'text'
    out: Optional[str] = None

    def __post_init__(self):
        if self.jobs < 1:
            raise UsageError(f"jobs must be at least 1, got {self.jobs}")
        if self.tol is not None and self.tol <= 0:
            raise UsageError(f"tol must be positive, got {self.tol}")
        if self.output_format not in OUTPUT_FORMATS:
            raise UsageError(f"format must be one of {', '.join(OUTPUT_FORMATS)}, got '{self.output_format}'")

    def selected(self, all_ids: List[str]) -> List[str]:
        return list(self.ids) if self.ids else list(all_ids)
