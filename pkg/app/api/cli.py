"""
Command-line front door: builds the argparse tree and maps errors to exit codes
"""

import argparse
import re
import sys
from typing import List, Optional, Sequence

from app.api.routers import ideals, lattice, scenarios, tables, walls
from app.config.settings import settings
from app.utils.logging_config import app_logger, log_command_info, log_error_with_context

EXIT_OK = 0
EXIT_RED = 1
EXIT_USAGE = 2

# "-2,1,-3" would otherwise be read as an option
_NEGATIVE_TRIPLE = re.compile(r"^[-−]\d+\s*,\s*[-−]?\d+\s*,\s*[-−]?\d+$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3walls",
        description="Exact tilt-stability walls on Picard rank one K3 surfaces",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for router in (lattice, walls, scenarios, tables, ideals):
        router.register(subparsers)
    return parser


def _protect_vectors(argv: Sequence[str]) -> List[str]:
    return [f" {token}" if _NEGATIVE_TRIPLE.match(token) else token for token in argv]


def cli_dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns 0 on success, 1 on a red scenario, 2 on a usage error"""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()

    try:
        args = parser.parse_args(_protect_vectors(argv))
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    log_command_info(app_logger, args.command, argv=" ".join(argv))
    try:
        settings.validate_limits()
        return args.handler(args)
    except ValueError as e:
        log_error_with_context(app_logger, e, {"command": args.command})
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        log_error_with_context(app_logger, e, {"command": args.command})
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
