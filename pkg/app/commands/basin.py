"""
`basin` — scan evenly spaced starting points and summarise where a method converges.
"""

import argparse
import csv
import logging
import sys

from pydantic import ValidationError  # type: ignore

from app.commands.common import (  # type: ignore
    EXIT_OK,
    add_problem_flags,
    add_tolerance_flags,
    config_from_args,
    format_number,
    report_error,
)
from app.dependencies import get_bench_service, get_method_service  # type: ignore
from app.domain.errors import RootJetError  # type: ignore
from app.expr.problem import make_problem  # type: ignore
from app.services.method_service import known_tokens  # type: ignore

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("basin", help="scan starting points for convergence")
    add_problem_flags(parser)
    parser.add_argument("--method", required=True, help="one of: " + ", ".join(known_tokens()))
    parser.add_argument("--from", dest="lo", type=float, required=True)
    parser.add_argument("--to", dest="hi", type=float, required=True)
    parser.add_argument("--samples", type=int, required=True)
    parser.add_argument("--format", choices=["table", "csv"], default="table")
    add_tolerance_flags(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    try:
        problem = make_problem(args.expr, root=args.root, derivatives=args.derivs)
        method = get_method_service().resolve(problem, args.method)
        config = config_from_args(args)
        report = get_bench_service().basin_scan(problem, method, args.lo, args.hi, args.samples, config)
    except (RootJetError, ValidationError, ValueError) as exc:
        return report_error(exc)

    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["x0", "status", "steps", "x_final"])
        for p in report.points:
            writer.writerow([format_number(p.x0), p.status.value, p.steps, format_number(p.x_final)])
        return EXIT_OK

    print(f"{'x0':>24}  {'status':<17}  {'steps':>9}  x_final")
    for p in report.points:
        print(f"{p.x0:>24.17g}  {p.status.value:<17}  {p.steps:>9}  {p.x_final:.17g}")
    print()
    print(f"method                  {report.method}")
    print(f"converged_fraction      {report.converged_fraction:.4g}")
    print(f"max_converged_abs_x0    {format_number(report.max_converged_abs_x0)}")
    print(f"min_unconverged_abs_x0  {format_number(report.min_unconverged_abs_x0)}")
    return EXIT_OK
