"""
Suite service — assembles SuiteSpec values from plain case descriptions,
including the built-in "reference-tables" suite.

Any problem with a case (bad expression, unknown method, invalid root) is a
suite error and aborts before anything runs.
"""

import logging
from typing import Any

from pydantic import ValidationError  # type: ignore

from app.domain.enums import ReportFormat  # type: ignore
from app.domain.errors import RootJetError, SuiteSpecError  # type: ignore
from app.domain.models import IterationConfig, SuiteCase, SuiteSpec  # type: ignore
from app.expr.problem import make_problem  # type: ignore
from app.services.method_service import MethodService  # type: ignore

logger = logging.getLogger(__name__)

TABLE_METHODS = [
    "order2", "order3", "order4",
    "newton", "two_step_newton", "halley", "chebyshev",
    "df4", "df8",
]

TABLE_CASES: list[dict[str, Any]] = [
    {"name": "atan-near", "expr": "atan(x)", "root": 0.0, "x0": -0.9},
    {"name": "atan-far", "expr": "atan(x)", "root": 0.0, "x0": -1e6},
    {"name": "sqrt-abs", "expr": "sqrt(abs(x))-4", "root": 16.0, "x0": -1e-6},
]


class SuiteService:
    """Validates case descriptions and resolves their methods."""

    def __init__(self, methods: MethodService) -> None:
        self._methods = methods

    def build_case(
        self,
        name: str,
        expr: str,
        x0: float,
        methods: list[str],
        root: float | None = None,
        derivs: list[float] | None = None,
        tolerances: dict[str, Any] | None = None,
    ) -> SuiteCase:
        try:
            problem = make_problem(expr, root=root, derivatives=derivs)
            config = IterationConfig(**(tolerances or {}))
            kinds = [self._methods.resolve(problem, token) for token in methods]
            return SuiteCase(name=name, problem=problem, x0=x0, methods=kinds, config=config)
        except (RootJetError, ValidationError) as exc:
            raise SuiteSpecError(f"case '{name}': {exc}") from exc

    def build_suite(
        self,
        name: str,
        cases: list[dict[str, Any]],
        repetitions: int | None = None,
        fmt: ReportFormat | str = ReportFormat.MARKDOWN,
    ) -> SuiteSpec:
        built = [self.build_case(**case) for case in cases]
        extra: dict[str, Any] = {} if repetitions is None else {"repetitions": repetitions}
        try:
            return SuiteSpec(name=name, cases=built, format=ReportFormat(fmt), **extra)
        except (ValidationError, ValueError) as exc:
            raise SuiteSpecError(f"suite '{name}': {exc}") from exc

    def reference_tables(self, repetitions: int | None = None) -> SuiteSpec:
        """The three comparison tables: atan from −0.9 and −10⁶, √|x|−4 from −10⁻⁶."""
        cases = [{**case, "methods": list(TABLE_METHODS)} for case in TABLE_CASES]
        return self.build_suite("reference-tables", cases, repetitions=repetitions)
