"""
Layered configuration: built-in defaults < environment (.env) < --config file < CLI flags.
"""
import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional, Tuple

from dotenv import dotenv_values, load_dotenv

from .errors import UsageError
from .models.catalog import OUTPUT_FORMATS, RunConfig
from .models.precision import DEFAULT_EXACT_SWITCHOVER, DEFAULT_MAX_TERMS, DEFAULT_PRECISION_BITS

LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')
PARAM_PREFIX = 'param.'

# environment variable -> settings field
ENVIRONMENT_KEYS = {
    'APERY_PREC_BITS': 'prec_bits',
    'APERY_TOL': 'tol',
    'APERY_MAX_TERMS': 'max_terms',
    'APERY_JOBS': 'jobs',
    'APERY_FORMAT': 'format',
    'APERY_LOG_LEVEL': 'log_level',
    'APERY_EXACT_SWITCHOVER': 'exact_switchover',
}
FILE_KEYS = ('prec_bits', 'tol', 'max_terms', 'jobs', 'format', 'out', 'ids', 'log_level', 'exact_switchover')


@dataclass(frozen=True)
class Settings:
    prec_bits: int = DEFAULT_PRECISION_BITS
    tol: Optional[Fraction] = None
    max_terms: int = DEFAULT_MAX_TERMS
    exact_switchover: int = DEFAULT_EXACT_SWITCHOVER
    jobs: int = 1
    format: str = 'text'
    out: Optional[str] = None
    ids: Optional[Tuple[str, ...]] = None
    log_level: str = 'WARNING'
    params: Mapping[str, str] = field(default_factory=dict)

    def merged(self, raw: Mapping[str, Any], source: str) -> 'Settings':
        """A copy with the given raw string values parsed over this one"""
        updates: Dict[str, Any] = {}
        params = dict(self.params)
        for key, value in raw.items():
            if value is None or value == '':
                continue
            if key.startswith(PARAM_PREFIX):
                params[key[len(PARAM_PREFIX):]] = str(value)
            elif key in FILE_KEYS:
                updates[key] = _parse_value(key, value, source)
            else:
                raise UsageError(f"Unknown configuration key '{key}' in {source}")
        return replace(self, params=params, **updates)

    def to_run_config(self) -> RunConfig:
        return RunConfig(
            ids=self.ids,
            overrides=dict(self.params),
            precision_bits=self.prec_bits,
            tol=self.tol,
            max_terms=self.max_terms,
            exact_switchover=self.exact_switchover,
            jobs=self.jobs,
            output_format=self.format,
            out=self.out,
        )


def _parse_int(key: str, value: Any, source: str, minimum: int) -> int:
    try:
        parsed = int(str(value).strip())
    except ValueError:
        raise UsageError(f"{key} must be an integer in {source}, got '{value}'")
    if parsed < minimum:
        raise UsageError(f"{key} must be at least {minimum} in {source}, got {parsed}")
    return parsed


def _parse_value(key: str, value: Any, source: str) -> Any:
    if isinstance(value, (list, tuple)) and key == 'ids':
        return tuple(value) or None
    if key in ('prec_bits', 'max_terms', 'exact_switchover'):
        return _parse_int(key, value, source, 1)
    if key == 'jobs':
        return _parse_int(key, value, source, 1)
    if key == 'tol':
        try:
            tol = value if isinstance(value, Fraction) else Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"tol is not a number in {source}: '{value}'")
        if tol <= 0:
            raise UsageError(f"tol must be positive in {source}, got {value}")
        return tol
    if key == 'format':
        fmt = str(value).strip().lower()
        if fmt not in OUTPUT_FORMATS:
            raise UsageError(f"format must be one of {', '.join(OUTPUT_FORMATS)} in {source}, got '{value}'")
        return fmt
    if key == 'log_level':
        level = str(value).strip().upper()
        if level not in LOG_LEVELS:
            raise UsageError(f"log_level must be one of {', '.join(LOG_LEVELS)} in {source}, got '{value}'")
        return level
    if key == 'ids':
        ids = tuple(part.strip() for part in str(value).split(',') if part.strip())
        return ids or None
    return str(value)


def from_environment(environ: Optional[Mapping[str, str]] = None) -> Settings:
    """Defaults overlaid with APERY_* variables; a .env file is read first when present"""
    if environ is None:
        load_dotenv()
        environ = os.environ
    raw = {name: environ[var] for var, name in ENVIRONMENT_KEYS.items() if var in environ}
    return Settings().merged(raw, 'the environment')


def load_config_file(settings: Settings, path: Optional[str]) -> Settings:
    if not path:
        return settings
    if not os.path.isfile(path):
        raise UsageError(f"Config file not found: {path}")
    return settings.merged(dotenv_values(path), path)


def resolve_settings(cli: Mapping[str, Any], config_path: Optional[str] = None,
                     environ: Optional[Mapping[str, str]] = None) -> Settings:
    """Apply every configuration layer in precedence order.

    Args:
        cli (Mapping): CLI values keyed like the config file; None means not given
        config_path (str, optional): flat key=value file passed with --config
        environ (Mapping, optional): environment to read instead of os.environ

    Returns:
        Settings: the effective settings
    """
    settings = load_config_file(from_environment(environ), config_path)
    return settings.merged(cli, 'the command line')
