import argparse
import logging
import os
import sys
from typing import List, Optional

from quandle_closure.commands import register_all
from quandle_closure.commands.output import error
from quandle_closure.config import (
    DEFAULT_USER_CONFIG_FILE,
    configure_logging,
    load_user_config,
    settings,
)
from quandle_closure.errors import QuandleError

logger = logging.getLogger("quandle_closure.main")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandle-closure",
        description="Orbits, closures and congruences of finite quandles",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"{parser.prog} {settings.version}",
        help="Print the version and exit",
    )
    parser.add_argument(
        "--config",
        "-c",
        help=f"Path to a YAML file overriding bounds (default: {DEFAULT_USER_CONFIG_FILE})",
    )
    parser.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        help="Enable verbose logging (default off)",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    register_all(subparsers)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        validate = getattr(args, "_validate", None)
        if validate is not None:
            validate(parser, args)
    except SystemExit as exc:
        # usage errors exit 2, --help and --version exit 0
        return exc.code if isinstance(exc.code, int) else 2

    # verbose→DEBUG, otherwise the configured level
    if args.verbose:
        settings.log_level = "DEBUG"
    configure_logging()

    try:
        if args.config:
            load_user_config(args.config)
        elif os.path.exists(DEFAULT_USER_CONFIG_FILE):
            load_user_config(DEFAULT_USER_CONFIG_FILE)
        return args.func(args)
    except QuandleError as exc:
        logger.debug("Command %s failed", args.command, exc_info=True)
        error(str(exc))
        return 1
    except OSError as exc:
        error(f"{exc.filename or ''}: {exc.strerror or exc}".lstrip(": "))
        return 1


if __name__ == "__main__":
    sys.exit(run())
