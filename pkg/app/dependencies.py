"""
Dependency Injection container.

Wires abstract ports → concrete adapters. To swap an adapter
(e.g., a different report writer), change the instantiation here.
Nothing else in the codebase changes  (Open/Closed Principle).
"""

from functools import lru_cache

from app.adapters.csv_report import CsvReport  # type: ignore
from app.adapters.expression_evaluator import ExpressionEvaluator  # type: ignore
from app.adapters.json_suite_loader import JsonSuiteLoader  # type: ignore
from app.adapters.markdown_report import MarkdownReport  # type: ignore
from app.domain.enums import ReportFormat  # type: ignore
from app.domain.models import ProblemSpec  # type: ignore
from app.ports.evaluator_port import EvaluatorPort  # type: ignore
from app.ports.report_port import ReportPort  # type: ignore
from app.ports.suite_port import SuiteLoaderPort  # type: ignore


# ── Adapters ──────────────────────────────────────────────────


def make_evaluator(problem: ProblemSpec) -> EvaluatorPort:
    """A fresh counted evaluator per solve; counters belong to one report."""
    return ExpressionEvaluator(problem)


@lru_cache(maxsize=1)
def get_reporters() -> dict[ReportFormat, ReportPort]:
    return {
        ReportFormat.CSV: CsvReport(),
        ReportFormat.MARKDOWN: MarkdownReport(),
    }


# ── Domain Services ───────────────────────────────────────────

from app.services.method_service import MethodService  # type: ignore # noqa: E402
from app.services.solver_service import SolverService  # type: ignore # noqa: E402


@lru_cache(maxsize=1)
def get_method_service() -> MethodService:
    return MethodService()


@lru_cache(maxsize=1)
def get_solver_service() -> SolverService:
    """Injects the evaluator factory into the iteration driver."""
    return SolverService(evaluator_factory=make_evaluator)


from app.services.suite_service import SuiteService  # type: ignore # noqa: E402


@lru_cache(maxsize=1)
def get_suite_service() -> SuiteService:
    return SuiteService(methods=get_method_service())


def get_suite_loader() -> SuiteLoaderPort:
    """Inject the suite file loader."""
    return JsonSuiteLoader(suites=get_suite_service())


from app.services.bench_service import BenchService  # type: ignore # noqa: E402


def get_bench_service(workers: int | None = None) -> BenchService:
    """Injects the solver and the report writers into BenchService."""
    return BenchService(solver=get_solver_service(), reporters=get_reporters(), workers=workers)
