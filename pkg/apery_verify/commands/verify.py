import logging

from ..services import runner
from ..utils.file_utils import emit
from . import EXIT_FAILED, EXIT_OK, add_run_options, settings_from_args

logger = logging.getLogger('verify-command')


def verify_command(args) -> int:
    """Verify one case at one parameter point"""
    settings = settings_from_args(args)
    report = runner.verify(
        args.id,
        params=settings.params,
        tol=settings.tol,
        precision_bits=settings.prec_bits,
        max_terms=settings.max_terms,
        exact_switchover=settings.exact_switchover,
    )
    emit([report], settings.format, settings.out)
    return EXIT_OK if report.passed else EXIT_FAILED


def register(subparsers) -> None:
    parser = subparsers.add_parser('verify', help='verify one identity at one parameter point')
    parser.add_argument('--id', required=True, help='catalog id, e.g. I02')
    add_run_options(parser)
    parser.set_defaults(handler=verify_command)
