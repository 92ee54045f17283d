"""
Shared plumbing for the CLI subcommands: the argument parser that reports
usage errors as exit code 1, tolerance flags and output helpers.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, NoReturn

from app.domain.models import IterationConfig  # type: ignore

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_CONVERGED = 2


class UsageError(Exception):
    """Bad command line: unknown flag, missing subcommand, malformed value."""


class CliArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def float_list(text: str) -> list[float]:
    """'1, -0.5, 2e-3' → [1.0, -0.5, 0.002]"""
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty derivative list")
    return values


def add_problem_flags(parser: argparse.ArgumentParser, expr_required: bool = True) -> None:
    parser.add_argument("--expr", required=expr_required, help="function g of x, e.g. 'atan(x)'")
    parser.add_argument("--root", type=float, default=None, help="known root l of g")
    parser.add_argument("--derivs", type=float_list, default=None,
                        help="explicit g'(l),g''(l),… instead of differentiating --expr")


def add_tolerance_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("stopping rule")
    group.add_argument("--atol", type=float, default=None)
    group.add_argument("--rtol", type=float, default=None)
    group.add_argument("--ftol", type=float, default=None)
    group.add_argument("--max-steps", type=int, default=None)
    group.add_argument("--x-max", type=float, default=None)


def config_from_args(args: argparse.Namespace) -> IterationConfig:
    overrides: dict[str, Any] = {
        name: getattr(args, name)
        for name in ("atol", "rtol", "ftol", "max_steps", "x_max")
        if getattr(args, name, None) is not None
    }
    return IterationConfig(**overrides)


def format_number(value: Any) -> str:
    if value is None:
        return "-"
    return f"{float(value):.17g}"


def print_table(rows: list[tuple[str, Any]]) -> None:
    width = max(len(key) for key, _ in rows)
    for key, value in rows:
        print(f"{key:<{width}}  {value}")


def report_error(exc: BaseException) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE
