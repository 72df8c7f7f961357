"""
Command-line entry point for the distinct-degrees toolkit
Configures logging, builds the subcommand parser and maps outcomes to exit codes
"""

import argparse
import logging
import sys
from typing import List, Optional

from config import settings
from ddt.commands import cluster, experiment, generate, stats, verify, witness
from ddt.constants import VERSION
from ddt.errors import DDTError
from ddt.utils.logging_setup import configure_logging

logger = logging.getLogger("ddt.cli")

COMMANDS = (stats, witness, verify, cluster, generate, experiment)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ddt",
        description="Distinct degrees, homogeneous sets and neighbourhood distance in graphs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument("--log-level", default=None, help=f"default {settings.log_level}")
    parser.add_argument("--log-format", choices=["console", "json"], default=None)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; 0 on success, 1 when a report fails, 2 on usage or input errors."""
    # Configure logging FIRST so parse-time diagnostics share the handler
    configure_logging(settings.log_level, settings.log_format)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.log_level or args.log_format:
        configure_logging(args.log_level or settings.log_level, args.log_format or settings.log_format)

    try:
        return args.handler(args)
    except (DDTError, ValueError, OSError) as exc:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(f"ddt: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
