"""
rootjet — command-line entry point.

Configures logging and dispatches the solve / coeffs / bench / basin
subcommands. Reports go to stdout, diagnostics to stderr.
"""

import logging
import sys

from app.commands import basin, bench, coeffs, solve
from app.commands.common import EXIT_USAGE, CliArgumentParser, UsageError
from app.config import settings

logger = logging.getLogger(__name__)


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog=settings.app_name,
        description="Root finding with one-evaluation methods built from derivatives at the root.",
    )
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="{solve,coeffs,bench,basin}")
    for command in (solve, coeffs, bench, basin):
        command.register(subparsers)
    return parser


# ── Logging ───────────────────────────────────────────────────
def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else settings.log_level,
        format="%(asctime)s │ %(levelname)-8s │ %(name)s │ %(message)s",
        stream=sys.stderr,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"{settings.app_name}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    configure_logging(args.verbose)
    logger.debug("Running %s", args.command)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
