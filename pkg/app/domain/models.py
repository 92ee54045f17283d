"""
Pydantic models for problems, methods, reports and suites.
Pure data — no I/O, no side effects.
"""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field, InstanceOf, field_validator, model_validator  # type: ignore

from app.config import settings  # type: ignore
from app.domain.enums import DerivativeSource, IterationStatus, MethodName, ReportFormat  # type: ignore
from app.domain.expr_nodes import ExprNode  # type: ignore
from app.domain.series import MethodCoefficients  # type: ignore


# ── Problem ───────────────────────────────────────────────────


class ProblemSpec(BaseModel):
    """A parsed function g of one variable plus what is known at its root."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    text: str
    expression: InstanceOf[ExprNode]
    root: float | None = None
    derivatives: tuple[float, ...] | None = None

    @field_validator("derivatives")
    @classmethod
    def _finite_derivatives(cls, value: tuple[float, ...] | None) -> tuple[float, ...] | None:
        if value is None:
            return None
        if not value:
            raise ValueError("explicit derivative list must not be empty")
        if not all(math.isfinite(v) for v in value):
            raise ValueError("explicit derivatives must be finite")
        return value

    @property
    def source(self) -> DerivativeSource:
        if self.derivatives is not None:
            return DerivativeSource.EXPLICIT
        return DerivativeSource.AUTO_JET


# ── Methods ───────────────────────────────────────────────────

# (theoretical order, function evaluations per step) for methods without state
BASELINE_PROFILE: dict[MethodName, tuple[int, int]] = {
    MethodName.NEWTON: (2, 2),
    MethodName.TWO_STEP_NEWTON: (3, 3),
    MethodName.HALLEY: (3, 3),
    MethodName.CHEBYSHEV: (3, 3),
    MethodName.KUNG_TRAUB_DF4: (4, 3),
    MethodName.DF8: (8, 4),
}

BASELINE_LABELS: dict[MethodName, str] = {
    MethodName.NEWTON: "Newton-Raphson",
    MethodName.TWO_STEP_NEWTON: "Newton two-step",
    MethodName.HALLEY: "Halley",
    MethodName.CHEBYSHEV: "Chebyshev",
    MethodName.KUNG_TRAUB_DF4: "Derivative free four order",
    MethodName.DF8: "Derivative free eight order",
}

_ORDINALS = {2: "Second", 3: "Third", 4: "Fourth", 5: "Fifth", 6: "Sixth", 7: "Seventh", 8: "Eighth"}


class MethodKind(BaseModel):
    """Either proposed(n) with its coefficients or one of the classic baselines."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: MethodName
    coefficients: InstanceOf[MethodCoefficients] | None = None
    # derivatives of g taken at the root to build the coefficients, charged once per solve
    bundle_evals: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _coefficients_match_kind(self) -> MethodKind:
        if self.name == MethodName.PROPOSED and self.coefficients is None:
            raise ValueError("the proposed method needs coefficients")
        if self.name != MethodName.PROPOSED and (self.coefficients is not None or self.bundle_evals):
            raise ValueError(f"{self.name.value} carries no coefficients")
        return self

    @classmethod
    def proposed(cls, coefficients: MethodCoefficients, bundle_evals: int = 0) -> MethodKind:
        return cls(name=MethodName.PROPOSED, coefficients=coefficients, bundle_evals=bundle_evals)

    @classmethod
    def baseline(cls, name: MethodName | str) -> MethodKind:
        return cls(name=MethodName(name))

    @property
    def order(self) -> int:
        if self.coefficients is not None:
            return self.coefficients.order
        return BASELINE_PROFILE[self.name][0]

    @property
    def evals_per_step(self) -> int:
        if self.name == MethodName.PROPOSED:
            return 1
        return BASELINE_PROFILE[self.name][1]

    @property
    def token(self) -> str:
        """Short name used on the command line and in CSV output."""
        if self.coefficients is not None:
            return f"order{self.coefficients.order}"
        return self.name.value

    @property
    def label(self) -> str:
        if self.coefficients is not None:
            ordinal = _ORDINALS.get(self.coefficients.order, f"Order-{self.coefficients.order}")
            return f"{ordinal} order"
        return BASELINE_LABELS[self.name]


# ── Iteration ─────────────────────────────────────────────────


class IterationConfig(BaseModel):
    """Stopping and divergence thresholds. Defaults come from settings."""

    model_config = ConfigDict(frozen=True)

    atol: float = Field(default_factory=lambda: settings.atol, gt=0)
    rtol: float = Field(default_factory=lambda: settings.rtol, gt=0)
    ftol: float = Field(default_factory=lambda: settings.ftol, gt=0)
    max_steps: int = Field(default_factory=lambda: settings.max_steps, ge=1)
    x_max: float = Field(default_factory=lambda: settings.x_max, gt=0)
    trace_limit: int = Field(default_factory=lambda: settings.trace_limit, ge=0)


class IterationReport(BaseModel):
    """Outcome of one solve."""

    method: str
    status: IterationStatus
    steps: int = Field(ge=0)
    x_final: float
    residual: float
    g_evals: int = 0
    derivative_evals: int = 0
    trace: list[float] = Field(default_factory=list)
    coc: float | None = None
    wall_time: float = 0.0
    dx_last: float | None = None
    failure_step: int | None = None
    detail: str | None = None

    @property
    def converged(self) -> bool:
        return self.status == IterationStatus.CONVERGED


# ── Bench ─────────────────────────────────────────────────────


class SuiteCase(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    problem: ProblemSpec
    x0: float
    methods: list[MethodKind] = Field(default_factory=list)
    config: IterationConfig = Field(default_factory=IterationConfig)


class SuiteSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    cases: list[SuiteCase] = Field(..., min_length=1)
    repetitions: int = Field(default_factory=lambda: settings.timing_repetitions, ge=1)
    format: ReportFormat = ReportFormat.MARKDOWN


class SuiteRow(BaseModel):
    """One (case, method) line of a benchmark report."""

    method: str
    token: str
    case: str
    expr: str
    x0: float
    steps: int
    status: IterationStatus
    residual: float
    x_final: float
    time_us: float
    coc: float | None = None
    detail: str | None = None


class BasinPoint(BaseModel):
    x0: float
    status: IterationStatus
    steps: int
    x_final: float


class BasinReport(BaseModel):
    method: str
    points: list[BasinPoint]
    converged_fraction: float
    max_converged_abs_x0: float | None = None
    min_unconverged_abs_x0: float | None = None
