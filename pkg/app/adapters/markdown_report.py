"""
Markdown implementation of ReportPort — one comparison table per case with
the Method / Time / Steps / converge layout.
"""

from __future__ import annotations

from app.domain.enums import IterationStatus
from app.domain.models import SuiteRow
from app.ports.report_port import ReportPort


class MarkdownReport(ReportPort):
    def render(self, rows: list[SuiteRow]) -> str:
        blocks: list[str] = []
        by_case: dict[str, list[SuiteRow]] = {}
        for row in rows:
            by_case.setdefault(row.case, []).append(row)

        for case_rows in by_case.values():
            first = case_rows[0]
            lines = [
                f"### Comparison of methods for f(x) = {first.expr} and x0 = {first.x0:g}",
                "",
                "| Method | Time µs | Steps | converge |",
                "|---|---:|---:|---|",
            ]
            for row in case_rows:
                converged = "yes" if row.status == IterationStatus.CONVERGED else "No"
                lines.append(f"| {row.method} | {row.time_us:.0f} | {row.steps} | {converged} |")
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n" if blocks else ""
