"""
JSON implementation of SuiteLoaderPort.

File schema (see docs/SUITE_FILE.md):
    {"name": ..., "repetitions": 100, "format": "markdown",
     "cases": [{"name", "expr", "root", "derivs", "x0", "methods", "tolerances"}]}
"""

from __future__ import annotations

import logging
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError  # type: ignore

from app.domain.enums import ReportFormat
from app.domain.errors import SuiteSpecError
from app.domain.models import SuiteSpec
from app.ports.suite_port import SuiteLoaderPort
from app.services.suite_service import SuiteService

logger = logging.getLogger(__name__)


class ToleranceFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    atol: float | None = None
    rtol: float | None = None
    ftol: float | None = None
    max_steps: int | None = None
    x_max: float | None = None
    trace_limit: int | None = None


class CaseFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    expr: str
    x0: float
    methods: list[str] = Field(default_factory=list)
    root: float | None = None
    derivs: list[float] | None = None
    tolerances: ToleranceFile | None = None


class SuiteFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    cases: list[CaseFile] = Field(..., min_length=1)
    repetitions: int | None = Field(default=None, ge=1)
    format: ReportFormat = ReportFormat.MARKDOWN


class JsonSuiteLoader(SuiteLoaderPort):
    """Reads and validates a suite file, then resolves it through SuiteService."""

    def __init__(self, suites: SuiteService) -> None:
        self._suites = suites

    def load(self, path: str | Path) -> SuiteSpec:
        path = Path(path)
        if not path.is_file():
            raise SuiteSpecError(f"suite file not found: {path}")
        try:
            raw = SuiteFile.model_validate_json(path.read_text(encoding="utf-8"))
        except ValidationError as exc:
            raise SuiteSpecError(f"invalid suite file {path}: {exc}") from exc

        cases = []
        for case in raw.cases:
            fields = case.model_dump(exclude={"tolerances"})
            if case.tolerances is not None:
                fields["tolerances"] = case.tolerances.model_dump(exclude_none=True)
            cases.append(fields)
        logger.info("Loaded suite '%s' from %s (%d case(s))", raw.name, path, len(cases))
        return self._suites.build_suite(raw.name, cases, repetitions=raw.repetitions, fmt=raw.format)
