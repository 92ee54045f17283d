"""
CSV implementation of ReportPort. Floats use 17 significant digits so every
value round-trips exactly.
"""

from __future__ import annotations

import csv
import io

from app.domain.models import SuiteRow
from app.ports.report_port import ReportPort

HEADER = ["method", "case", "steps", "status", "residual", "time_us", "coc"]


def format_float(value: float | None) -> str:
    if value is None:
        return ""
    return f"{value:.17g}"


class CsvReport(ReportPort):
    def render(self, rows: list[SuiteRow]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(HEADER)
        for row in rows:
            writer.writerow([
                row.token,
                row.case,
                row.steps,
                row.status.value,
                format_float(row.residual),
                format_float(row.time_us),
                format_float(row.coc),
            ])
        return buffer.getvalue()
