import argparse
import logging
import os
import sys
from typing import Optional, Sequence

from dotenv import load_dotenv

from .errors import UsageError

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger('apery-verify')


class App:
    """The configured command-line application"""

    def __init__(self, parser: argparse.ArgumentParser):
        self.parser = parser

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        from .commands import EXIT_USAGE

        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE
        try:
            return args.handler(args)
        except UsageError as e:
            logger.error(f"Usage error: {str(e)}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except OSError as e:
            logger.error(f"I/O error: {str(e)}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE


def create_app() -> App:
    """Create and configure the verification application"""
    # Configure logging from .env / environment; commands refine the level later
    load_dotenv()
    level = os.environ.get('APERY_LOG_LEVEL', 'WARNING').upper()
    logging.basicConfig(
        level=level if level in logging.getLevelNamesMapping() else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )

    # Initialize the identity catalog
    from .services.registry import initialize_catalog
    initialize_catalog()

    # Register commands
    from .commands import cases, suite, verify

    parser = argparse.ArgumentParser(
        prog='apery-verify',
        description='Numerical and exact verification of multiple Apery-like series identities',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    cases.register(subparsers)
    verify.register(subparsers)
    suite.register(subparsers)

    return App(parser)
