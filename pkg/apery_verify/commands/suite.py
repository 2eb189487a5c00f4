import logging

from ..services import runner
from ..utils.file_utils import emit
from . import EXIT_FAILED, EXIT_OK, add_run_options, settings_from_args

logger = logging.getLogger('suite-command')


def suite_command(args) -> int:
    """Run the default grids of the selected cases"""
    settings = settings_from_args(args, ids=args.ids, jobs=args.jobs)
    reports = runner.run_suite(settings.to_run_config())
    emit(reports, settings.format, settings.out)
    failed = [report for report in reports if not report.passed]
    if failed:
        logger.warning(f"{len(failed)} of {len(reports)} verifications did not pass")
        return EXIT_FAILED
    return EXIT_OK


def register(subparsers) -> None:
    parser = subparsers.add_parser('suite', help='run the default parameter grids')
    parser.add_argument('--ids', help='comma-separated catalog ids, all cases when omitted')
    parser.add_argument('--jobs', help='worker processes')
    add_run_options(parser)
    parser.set_defaults(handler=suite_command)
