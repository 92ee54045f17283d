"""
Expression-backed implementation of EvaluatorPort.
"""

from __future__ import annotations

from typing import Any

from app.domain.models import ProblemSpec
from app.expr.evaluate import compile_scalar, eval_jet
from app.ports.evaluator_port import EvaluatorPort
from app.series.backend import FLOAT, NumericBackend


class ExpressionEvaluator(EvaluatorPort):
    """Evaluates a parsed problem; derivatives at iterates come from jets."""

    def __init__(self, problem: ProblemSpec, backend: NumericBackend = FLOAT) -> None:
        super().__init__()
        self._problem = problem
        self._backend = backend
        self._g = compile_scalar(problem.expression, backend)

    def value(self, x: Any) -> Any:
        self.g_evals += 1
        return self._g(x)

    def derivatives(self, x: Any, order: int) -> list[Any]:
        self.derivative_evals += order
        jet = eval_jet(self._problem.expression, x, order, self._backend)
        return jet.derivatives()[1:]
