"""
greedykit command-line entry point

Subcommands: solve, check, oracle, bench. Reports go to stdout, logs and
error messages to stderr.

Exit codes:
    0  success
    1  a checked property fails
    2  invalid arguments
    3  instance parse error or domain error
    4  capability limit (oracle cap, exhaustive check size)
    5  internal error
"""

import argparse
import logging
import sys
from typing import List, Optional

from greedykit import __version__
from greedykit.commands import bench, check, oracle, solve
from greedykit.core.config import settings
from greedykit.core.exceptions import GreedyKitError
from greedykit.core.logging_config import setup_logging

logger = logging.getLogger(__name__)

INTERNAL_ERROR = 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greedykit",
        description="Greedy, lazy and stochastic maximization of monotone submodular functions",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=settings.LOG_LEVEL,
                        help=f"Logging level (default: {settings.LOG_LEVEL})")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")

    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (solve, check, oracle, bench):
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    setup_logging("DEBUG" if args.verbose else args.log_level)
    logger.debug(f"greedykit {__version__} - {args.command} - environment: {settings.ENVIRONMENT}")

    try:
        return args.handler(args)
    except GreedyKitError as exc:
        logger.debug(f"{type(exc).__name__}: {exc.message}")
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.exit_code
    except Exception as exc:
        logger.error(f"Unhandled exception: {exc}", exc_info=True)
        print("error: internal error", file=sys.stderr)
        return INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
