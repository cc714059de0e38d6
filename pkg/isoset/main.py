"""
isoset command line
Wires the subcommands, configures logging and turns errors into exit codes
"""

import argparse
import sys
from typing import List, Optional

from config.settings import settings
from isoset.commands import bench, bound, exact, gen, partition, reduce, verify
from isoset.commands.common import Output
from isoset.services.error_handler import error_handler
from isoset.utils.logger import setup_logging

COMMANDS = (gen, reduce, exact, bound, partition, verify, bench)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoset",
        description="Independent isolating sets: exact values, constructive bounds, gadgets",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    parser.add_argument("--json", action="store_true", help="emit reports as JSON")
    parser.add_argument("--log-level", default=None, help=f"logging level (default: {settings.LOG_LEVEL})")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.add_parser(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logger = setup_logging(args.log_level)
    logger.debug(f"{settings.APP_NAME} {settings.APP_VERSION}: {args.command}")

    out = Output(json=args.json)
    try:
        return args.handler(args, out)
    except Exception as e:
        info = error_handler.handle_error(e, context=args.command)
        sys.stderr.write(f"error: {info.error_message}\n")
        for suggestion in info.suggestions[:2]:
            sys.stderr.write(f"  hint: {suggestion}\n")
        if settings.DEBUG:
            raise
        return info.exit_code


if __name__ == "__main__":
    sys.exit(main())
