"""
Abstract interface for evaluating g and its derivatives at an iterate.
Every call is counted so reports can show the cost of a method per step.
"""

from abc import ABC, abstractmethod
from typing import Any


class EvaluatorPort(ABC):
    """Port for counted function evaluation."""

    def __init__(self) -> None:
        self.g_evals = 0
        self.derivative_evals = 0

    @abstractmethod
    def value(self, x: Any) -> Any:
        """g(x). Increments g_evals by one."""
        ...

    @abstractmethod
    def derivatives(self, x: Any, order: int) -> list[Any]:
        """
        g'(x) … g^(order)(x) as plain derivatives.
        Increments derivative_evals by `order`.
        """
        ...
