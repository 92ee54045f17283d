"""
`bench` — run a suite file or the built-in comparison tables and print the report.
"""

import argparse
import logging

from app.commands.common import EXIT_OK, report_error  # type: ignore
from app.dependencies import get_bench_service, get_suite_loader, get_suite_service  # type: ignore
from app.domain.enums import ReportFormat  # type: ignore
from app.domain.errors import RootJetError  # type: ignore

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("bench", help="run a benchmark suite")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--suite", help="path to a JSON suite file")
    source.add_argument("--paper-tables", "--reference-tables", dest="reference_tables", action="store_true",
                        help="run the built-in comparison tables")
    parser.add_argument("--format", choices=[f.value for f in ReportFormat], default=None,
                        help="defaults to the suite's own format")
    parser.add_argument("--repetitions", type=int, default=None, help="timing repetitions per row")
    parser.add_argument("--workers", type=int, default=None, help="rows run in parallel")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    try:
        if args.reference_tables:
            spec = get_suite_service().reference_tables(repetitions=args.repetitions)
        else:
            spec = get_suite_loader().load(args.suite)
            if args.repetitions is not None:
                spec = spec.model_copy(update={"repetitions": args.repetitions})
        if args.repetitions is not None and args.repetitions < 1:
            raise ValueError("--repetitions must be ≥ 1")
        if args.workers is not None and args.workers < 1:
            raise ValueError("--workers must be ≥ 1")
    except (RootJetError, ValueError) as exc:
        return report_error(exc)

    bench = get_bench_service(workers=args.workers)
    rows = bench.run_suite(spec)
    fmt = ReportFormat(args.format) if args.format else spec.format
    print(bench.emit_report(rows, fmt), end="")
    return EXIT_OK
