"""
Solver service — the iteration driver.

Stopping rule: after each accepted update, converged when
|Δx| ≤ atol + rtol·|x| or |g(x)| ≤ ftol (also checked once at x0).
Divergence: the proposed update is non-finite or exceeds x_max in magnitude;
that update is not accepted. Step failures (zero denominators, domain
errors at an iterate) end the run with status numerical_failure.
"""

import logging
import sys
import time
from collections import deque
from functools import partial
from typing import Any, Callable

from app.domain.enums import IterationStatus, MethodName  # type: ignore
from app.domain.errors import InsufficientTraceError, NumericalFailure  # type: ignore
from app.domain.models import IterationConfig, IterationReport, MethodKind, ProblemSpec  # type: ignore
from app.domain.series import is_finite  # type: ignore
from app.methods import baselines  # type: ignore
from app.methods.baselines import StepFn  # type: ignore
from app.methods.proposed import proposed_step  # type: ignore
from app.ports.evaluator_port import EvaluatorPort  # type: ignore
from app.services.convergence import estimate_coc  # type: ignore

logger = logging.getLogger(__name__)

EvaluatorFactory = Callable[[ProblemSpec], EvaluatorPort]

BASELINE_STEPS: dict[MethodName, StepFn] = {
    MethodName.NEWTON: baselines.newton_step,
    MethodName.TWO_STEP_NEWTON: baselines.two_step_newton_step,
    MethodName.HALLEY: baselines.halley_step,
    MethodName.CHEBYSHEV: baselines.chebyshev_step,
    MethodName.KUNG_TRAUB_DF4: baselines.df4_step,
    MethodName.DF8: baselines.df8_step,
}

# errors closer to the root than this are round-off, not convergence
_COC_NOISE = 64 * sys.float_info.epsilon


def _proposed(coefficients, x: Any, gx: Any, ev: EvaluatorPort) -> Any:
    return proposed_step(x, gx, coefficients)


def step_function(method: MethodKind) -> StepFn:
    if method.name == MethodName.PROPOSED:
        return partial(_proposed, method.coefficients)
    return BASELINE_STEPS[method.name]


class SolverService:
    """Runs one method on one problem from one starting point."""

    def __init__(self, evaluator_factory: EvaluatorFactory) -> None:
        self._evaluator_factory = evaluator_factory

    def iterate(
        self,
        problem: ProblemSpec,
        method: MethodKind,
        x0: float,
        config: IterationConfig | None = None,
    ) -> IterationReport:
        cfg = config or IterationConfig()
        ev = self._evaluator_factory(problem)
        step = step_function(method)
        trace: deque = deque(maxlen=max(cfg.trace_limit, 1))
        debug = logger.isEnabledFor(logging.DEBUG)

        x = float(x0)
        steps = 0
        dx_last: float | None = None
        failure_step: int | None = None
        detail: str | None = None
        status = IterationStatus.MAX_STEPS
        gx: Any = float("nan")

        started = time.perf_counter()
        try:
            gx = ev.value(x)
            if not is_finite(gx):
                raise NumericalFailure(f"g(x0) is not finite: {gx!r}")
        except (NumericalFailure, ValueError, ArithmeticError) as exc:
            status, failure_step, detail = IterationStatus.NUMERICAL_FAILURE, 0, str(exc)
        else:
            trace.append(x)
            if abs(gx) <= cfg.ftol:
                status = IterationStatus.CONVERGED

            while status == IterationStatus.MAX_STEPS and steps < cfg.max_steps:
                try:
                    x_new = step(x, gx, ev)
                except (NumericalFailure, ValueError, ArithmeticError) as exc:
                    status, failure_step, detail = IterationStatus.NUMERICAL_FAILURE, steps + 1, str(exc)
                    break

                if not is_finite(x_new) or abs(x_new) > cfg.x_max:
                    status = IterationStatus.DIVERGED
                    detail = f"update {x_new!r} at step {steps + 1} left |x| ≤ {cfg.x_max:g}"
                    break

                try:
                    gx_new = ev.value(x_new)
                    if not is_finite(gx_new):
                        raise NumericalFailure(f"g({x_new!r}) is not finite")
                except (NumericalFailure, ValueError, ArithmeticError) as exc:
                    status, failure_step, detail = IterationStatus.NUMERICAL_FAILURE, steps + 1, str(exc)
                    break

                steps += 1
                dx_last = x_new - x
                x, gx = x_new, gx_new
                trace.append(x)
                if debug:
                    logger.debug("%s step %d: x=%r g=%r", method.token, steps, x, gx)

                if abs(dx_last) <= cfg.atol + cfg.rtol * abs(x) or abs(gx) <= cfg.ftol:
                    status = IterationStatus.CONVERGED
        wall_time = time.perf_counter() - started

        if status == IterationStatus.MAX_STEPS:
            detail = f"no convergence within {cfg.max_steps} steps"

        report = IterationReport(
            method=method.label,
            status=status,
            steps=steps,
            x_final=float(x),
            residual=float(abs(gx)) if is_finite(gx) else float("nan"),
            g_evals=ev.g_evals,
            derivative_evals=ev.derivative_evals + method.bundle_evals,
            trace=[float(v) for v in trace] if cfg.trace_limit else [],
            coc=self._coc(list(trace), problem.root),
            wall_time=wall_time,
            dx_last=dx_last,
            failure_step=failure_step,
            detail=detail,
        )
        logger.info(
            "%s on %s from x0=%r: %s after %d steps (x=%r)",
            method.label, problem.text, x0, status.value, steps, report.x_final,
        )
        return report

    @staticmethod
    def _coc(trace: list[float], root: float | None) -> float | None:
        if root is None or len(trace) < 4:
            return None
        try:
            return estimate_coc(trace, root, floor=_COC_NOISE * max(1.0, abs(root)))
        except InsufficientTraceError:
            return None
