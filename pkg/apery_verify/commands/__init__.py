"""
CLI sub-commands. Each module exposes register(subparsers), which adds its
parser and binds a handler returning the process exit code.
"""
import argparse
import logging
from typing import Any, Dict

from ..config import LOG_LEVELS, PARAM_PREFIX, Settings, resolve_settings
from ..errors import UsageError
from ..models.catalog import OUTPUT_FORMATS

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def add_run_options(parser: argparse.ArgumentParser) -> None:
    """Options shared by verify and suite; unset flags stay None so lower layers show through"""
    parser.add_argument('--param', action='append', default=[], metavar='NAME=VALUE',
                        help='override a case parameter (repeatable)')
    parser.add_argument('--tol', help='comparison tolerance, e.g. 1e-10')
    parser.add_argument('--prec-bits', dest='prec_bits', help='minimum working precision in bits')
    parser.add_argument('--max-terms', dest='max_terms', help='term cap for accelerated summations')
    parser.add_argument('--exact-switchover', dest='exact_switchover',
                        help='index above which exact rational rows switch to reals')
    parser.add_argument('--format', choices=OUTPUT_FORMATS, help='report format')
    parser.add_argument('--out', help='write the report to this path instead of standard output')
    parser.add_argument('--config', help='flat key=value configuration file')
    parser.add_argument('--log-level', dest='log_level', type=str.upper, choices=LOG_LEVELS)


def _split_param(raw: str) -> tuple:
    name, sep, value = raw.partition('=')
    if not sep or not name.strip():
        raise UsageError(f"--param expects NAME=VALUE, got '{raw}'")
    return name.strip(), value.strip()


def settings_from_args(args: argparse.Namespace, **extra: Any) -> Settings:
    """Resolve every configuration layer for a parsed command line and apply its log level"""
    cli: Dict[str, Any] = {
        key: getattr(args, key)
        for key in ('tol', 'prec_bits', 'max_terms', 'exact_switchover', 'format', 'out', 'log_level')
    }
    cli.update(extra)
    for raw in args.param:
        name, value = _split_param(raw)
        cli[PARAM_PREFIX + name] = value
    settings = resolve_settings(cli, args.config)
    logging.getLogger().setLevel(settings.log_level)
    return settings
