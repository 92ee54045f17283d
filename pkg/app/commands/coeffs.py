"""
`coeffs` — print the correction coefficients of the order-n method, plus the
fixed-point α, β, γ when n ≤ 4.
"""

import argparse
import logging

from pydantic import ValidationError  # type: ignore

from app.commands.common import EXIT_OK, UsageError, add_problem_flags, format_number, print_table, report_error  # type: ignore
from app.config import settings  # type: ignore
from app.domain.enums import ReversionMethod  # type: ignore
from app.domain.errors import RootJetError  # type: ignore
from app.domain.series import DerivativeBundle  # type: ignore
from app.expr.problem import bundle_at_root, make_problem  # type: ignore
from app.series.reversion import fspace_correction, revert_series  # type: ignore
from app.services.convergence import efficiency_index  # type: ignore

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("coeffs", help="derive c₁…c₍ₙ₋₁₎ from the derivatives at the root")
    add_problem_flags(parser, expr_required=False)
    parser.add_argument("--order", type=int, required=True, help=f"method order n (2–{settings.max_order})")
    parser.add_argument("--reversion", choices=[m.value for m in ReversionMethod], default=ReversionMethod.NEWTON.value)
    parser.set_defaults(handler=run)


def _bundle(args: argparse.Namespace) -> DerivativeBundle:
    if args.expr is None:
        if args.derivs is None:
            raise UsageError("give --expr with --root, or --derivs")
        root = args.root if args.root is not None else 0.0
        return DerivativeBundle(root=root, derivs=tuple(args.derivs[: max(args.order - 1, 1)]))
    problem = make_problem(args.expr, root=args.root, derivatives=args.derivs)
    return bundle_at_root(problem, max(args.order - 1, 1))


def run(args: argparse.Namespace) -> int:
    try:
        bundle = _bundle(args)
        coefficients = revert_series(bundle, args.order, ReversionMethod(args.reversion))
    except (RootJetError, UsageError, ValidationError) as exc:
        return report_error(exc)

    rows: list[tuple[str, object]] = [
        ("order", coefficients.order),
        ("root", format_number(bundle.root)),
    ]
    rows += [(f"c{k}", format_number(c)) for k, c in enumerate(coefficients.c, start=1)]
    if coefficients.order <= 4:
        correction = fspace_correction(bundle)
        for name, value in (("alpha", correction.alpha), ("beta", correction.beta), ("gamma", correction.gamma)):
            if value is not None:
                rows.append((name, format_number(value)))
    rows.append(("efficiency", format_number(efficiency_index(coefficients.order, 1))))
    rows.append(("optimal_3_eval", format_number(efficiency_index(4, 3))))
    print_table(rows)
    return EXIT_OK
