"""
Abstract syntax of a one-variable expression.

Nodes are frozen dataclasses, so trees are hashable, comparable and safe to
share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

CONSTANTS = frozenset({"pi", "e"})
FUNCTIONS = frozenset({"sin", "cos", "tan", "atan", "exp", "ln", "sqrt", "abs"})
BINARY_OPS = frozenset({"+", "-", "*", "/", "^"})
VARIABLE = "x"


class ExprNode:
    """Common base of every node kind."""

    __slots__ = ()


@dataclass(frozen=True)
class Constant(ExprNode):
    value: float
    symbol: str | None = None  # "pi" or "e" for named constants


@dataclass(frozen=True)
class Variable(ExprNode):
    name: str = VARIABLE


@dataclass(frozen=True)
class Negate(ExprNode):
    operand: ExprNode


@dataclass(frozen=True)
class BinaryOp(ExprNode):
    op: str
    left: ExprNode
    right: ExprNode

    def __post_init__(self) -> None:
        if self.op not in BINARY_OPS:
            raise ValueError(f"unknown binary operator {self.op!r}")
        if self.op == "^" and not isinstance(self.right, Constant):
            raise ValueError("the exponent of ^ must be a constant")


@dataclass(frozen=True)
class Call(ExprNode):
    func: str
    arg: ExprNode

    def __post_init__(self) -> None:
        if self.func not in FUNCTIONS:
            raise ValueError(f"unknown function {self.func!r}")
