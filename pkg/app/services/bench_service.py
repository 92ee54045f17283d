"""
Bench service — suite runs, basin scans and report emission.

Rows run concurrently in worker threads (bounded by a semaphore) and come back
in case order × method order. A failing row never aborts the suite.

Timing: the first run of a row supplies every reported field; further runs
(up to `repetitions`, while the per-row budget lasts) only feed the median.
"""

import asyncio
import logging
import time

import numpy as np  # type: ignore

from app.config import settings  # type: ignore
from app.domain.enums import IterationStatus, ReportFormat  # type: ignore
from app.domain.errors import RootJetError  # type: ignore
from app.domain.models import (  # type: ignore
    BasinPoint,
    BasinReport,
    IterationConfig,
    MethodKind,
    ProblemSpec,
    SuiteCase,
    SuiteRow,
    SuiteSpec,
)
from app.ports.report_port import ReportPort  # type: ignore
from app.services.solver_service import SolverService  # type: ignore

logger = logging.getLogger(__name__)


class BenchService:
    """Runs suites and basin scans on top of the solver."""

    def __init__(
        self,
        solver: SolverService,
        reporters: dict[ReportFormat, ReportPort],
        workers: int | None = None,
        timing_budget_s: float | None = None,
    ) -> None:
        self._solver = solver
        self._reporters = reporters
        self._workers = workers or settings.bench_workers
        self._budget = settings.timing_budget_s if timing_budget_s is None else timing_budget_s

    # ── Suites ────────────────────────────────────────────────

    def run_suite(self, spec: SuiteSpec) -> list[SuiteRow]:
        return asyncio.run(self.run_suite_async(spec))

    async def run_suite_async(self, spec: SuiteSpec) -> list[SuiteRow]:
        logger.info(
            "Running suite '%s': %d case(s), %d repetition(s), %d worker(s)",
            spec.name, len(spec.cases), spec.repetitions, self._workers,
        )
        sem = asyncio.Semaphore(self._workers)

        async def _guarded(case: SuiteCase, method: MethodKind) -> SuiteRow:
            async with sem:
                return await asyncio.to_thread(self._run_row, case, method, spec.repetitions)

        tasks = [_guarded(case, method) for case in spec.cases for method in case.methods]
        rows = await asyncio.gather(*tasks)
        logger.info("Suite '%s' finished: %d row(s)", spec.name, len(rows))
        return list(rows)

    def _run_row(self, case: SuiteCase, method: MethodKind, repetitions: int) -> SuiteRow:
        try:
            report = self._solver.iterate(case.problem, method, case.x0, case.config)
        except RootJetError as exc:
            logger.warning("Row %s / %s failed: %s", case.name, method.token, exc)
            return SuiteRow(
                method=method.label,
                token=method.token,
                case=case.name,
                expr=case.problem.text,
                x0=case.x0,
                steps=0,
                status=IterationStatus.NUMERICAL_FAILURE,
                residual=float("nan"),
                x_final=float("nan"),
                time_us=0.0,
                detail=str(exc),
            )

        timings = [report.wall_time]
        deadline = time.perf_counter() + self._budget
        while len(timings) < repetitions and time.perf_counter() < deadline:
            timings.append(self._solver.iterate(case.problem, method, case.x0, case.config).wall_time)

        return SuiteRow(
            method=method.label,
            token=method.token,
            case=case.name,
            expr=case.problem.text,
            x0=case.x0,
            steps=report.steps,
            status=report.status,
            residual=report.residual,
            x_final=report.x_final,
            time_us=float(np.median(timings)) * 1e6,
            coc=report.coc,
            detail=report.detail,
        )

    # ── Basins ────────────────────────────────────────────────

    def basin_scan(
        self,
        problem: ProblemSpec,
        method: MethodKind,
        lo: float,
        hi: float,
        samples: int,
        config: IterationConfig | None = None,
    ) -> BasinReport:
        """Run the method from `samples` evenly spaced x0 in [lo, hi]."""
        if samples < 1:
            raise ValueError(f"samples must be ≥ 1, got {samples}")
        if lo > hi:
            raise ValueError(f"empty range: from {lo} > to {hi}")

        points: list[BasinPoint] = []
        for x0 in np.linspace(lo, hi, samples):
            report = self._solver.iterate(problem, method, float(x0), config)
            points.append(
                BasinPoint(x0=float(x0), status=report.status, steps=report.steps, x_final=report.x_final)
            )

        converged = [abs(p.x0) for p in points if p.status == IterationStatus.CONVERGED]
        unconverged = [abs(p.x0) for p in points if p.status != IterationStatus.CONVERGED]
        summary = BasinReport(
            method=method.label,
            points=points,
            converged_fraction=len(converged) / len(points),
            max_converged_abs_x0=max(converged) if converged else None,
            min_unconverged_abs_x0=min(unconverged) if unconverged else None,
        )
        logger.info(
            "Basin of %s on %s over [%g, %g]: %.0f%% converged",
            method.label, problem.text, lo, hi, 100 * summary.converged_fraction,
        )
        return summary

    # ── Reports ───────────────────────────────────────────────

    def emit_report(self, rows: list[SuiteRow], fmt: ReportFormat | str) -> str:
        return self._reporters[ReportFormat(fmt)].render(rows)
