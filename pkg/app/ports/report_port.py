"""
Abstract interface for rendering benchmark rows.
"""

from abc import ABC, abstractmethod

from app.domain.models import SuiteRow


class ReportPort(ABC):
    """Port for turning suite rows into text."""

    @abstractmethod
    def render(self, rows: list[SuiteRow]) -> str:
        ...
