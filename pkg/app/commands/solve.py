"""
`solve` — run one method from one starting point and print the report.
Exit 0 on convergence, 2 when the method ran without converging.
"""

import argparse
import csv
import logging
import sys

from pydantic import ValidationError  # type: ignore

from app.commands.common import (  # type: ignore
    EXIT_NOT_CONVERGED,
    EXIT_OK,
    add_problem_flags,
    add_tolerance_flags,
    config_from_args,
    format_number,
    print_table,
    report_error,
)
from app.dependencies import get_method_service, get_solver_service  # type: ignore
from app.domain.errors import RootJetError  # type: ignore
from app.domain.models import IterationReport, MethodKind  # type: ignore
from app.expr.problem import make_problem  # type: ignore
from app.services.convergence import efficiency_index  # type: ignore
from app.services.method_service import known_tokens  # type: ignore

logger = logging.getLogger(__name__)

CSV_HEADER = ["method", "status", "steps", "x_final", "residual", "g_evals", "derivative_evals", "coc", "time_us"]


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("solve", help="solve g(x) = 0 with one method")
    add_problem_flags(parser)
    which = parser.add_mutually_exclusive_group(required=True)
    which.add_argument("--order", type=int, help="proposed method of order n (2–8)")
    which.add_argument("--method", help="baseline: " + ", ".join(t for t in known_tokens() if not t.startswith("order")))
    parser.add_argument("--x0", type=float, required=True, help="starting point (use --x0=-1e-6 for exponents)")
    parser.add_argument("--format", choices=["table", "csv"], default="table")
    parser.add_argument("--trace", action="store_true", help="print the kept iterates")
    add_tolerance_flags(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    try:
        problem = make_problem(args.expr, root=args.root, derivatives=args.derivs)
        methods = get_method_service()
        if args.order is not None:
            method = methods.proposed(problem, args.order)
        else:
            method = methods.resolve(problem, args.method)
        config = config_from_args(args)
    except (RootJetError, ValidationError) as exc:
        return report_error(exc)

    report = get_solver_service().iterate(problem, method, args.x0, config)
    if args.format == "csv":
        _print_csv(method, report)
    else:
        _print_human(method, report, args.trace)
    return EXIT_OK if report.converged else EXIT_NOT_CONVERGED


def _print_human(method: MethodKind, report: IterationReport, with_trace: bool) -> None:
    rows = [
        ("method", report.method),
        ("status", report.status.value),
        ("steps", report.steps),
        ("x_final", format_number(report.x_final)),
        ("residual", format_number(report.residual)),
        ("g_evals", report.g_evals),
        ("derivative_evals", report.derivative_evals),
        ("efficiency", f"{efficiency_index(method.order, method.evals_per_step):.6g}"
                       f" (order {method.order}, {method.evals_per_step} eval/step)"),
        ("coc", format_number(report.coc)),
        ("time_us", f"{report.wall_time * 1e6:.1f}"),
    ]
    if report.detail:
        rows.append(("detail", report.detail))
    print_table(rows)
    if with_trace:
        for x in report.trace:
            print(format_number(x))


def _print_csv(method: MethodKind, report: IterationReport) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerow([
        method.token,
        report.status.value,
        report.steps,
        format_number(report.x_final),
        format_number(report.residual),
        report.g_evals,
        report.derivative_evals,
        "" if report.coc is None else format_number(report.coc),
        format_number(report.wall_time * 1e6),
    ])
