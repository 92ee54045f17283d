"""
Abstract interface for loading suite definitions.
"""

from abc import ABC, abstractmethod
from pathlib import Path

from app.domain.models import SuiteSpec


class SuiteLoaderPort(ABC):
    """Port for reading a suite file into a validated SuiteSpec."""

    @abstractmethod
    def load(self, path: str | Path) -> SuiteSpec:
        """Raises SuiteSpecError when the file is missing or invalid."""
        ...
