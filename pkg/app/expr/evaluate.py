"""
Scalar and jet evaluation of expression trees.

`compile_scalar` builds a closure tree once so the iteration hot loop never
walks the AST; `eval_jet` propagates truncated Taylor series through the same
tree and names the offending node when a point is singular.
"""

from __future__ import annotations

from typing import Any, Callable

from app.domain.errors import (
    ExprDomainError,
    JetError,
    NonSmoothError,
    SingularPointError,
)
from app.domain.expr_nodes import BinaryOp, Call, Constant, ExprNode, Negate, Variable
from app.expr.parser import to_text
from app.series import elementary
from app.series.backend import FLOAT, NumericBackend
from app.series.jet import TaylorJet

ScalarFn = Callable[[Any], Any]


def _constant_value(node: Constant, backend: NumericBackend) -> Any:
    if node.symbol == "pi":
        return backend.pi()
    if node.symbol == "e":
        return backend.e()
    return backend.number(node.value)


def _scalar_function(name: str, backend: NumericBackend) -> ScalarFn:
    if name == "ln":
        return backend.log
    if name == "abs":
        return abs
    return getattr(backend, name)


def compile_scalar(node: ExprNode, backend: NumericBackend = FLOAT) -> ScalarFn:
    """Callable x ↦ g(x). Domain violations surface as ValueError/ArithmeticError."""
    if isinstance(node, Constant):
        value = _constant_value(node, backend)
        return lambda x: value
    if isinstance(node, Variable):
        return lambda x: x
    if isinstance(node, Negate):
        inner = compile_scalar(node.operand, backend)
        return lambda x: -inner(x)
    if isinstance(node, Call):
        fn = _scalar_function(node.func, backend)
        if isinstance(node.arg, Variable):
            return fn
        arg = compile_scalar(node.arg, backend)
        return lambda x: fn(arg(x))
    if isinstance(node, BinaryOp):
        left = compile_scalar(node.left, backend)
        if node.op == "^":
            exponent = node.right.value  # type: ignore[attr-defined]
            if float(exponent).is_integer():
                n = int(exponent)
                return lambda x: left(x) ** n
            p = backend.number(exponent)
            return lambda x: backend.pow(left(x), p)
        right = compile_scalar(node.right, backend)
        if node.op == "+":
            return lambda x: left(x) + right(x)
        if node.op == "-":
            return lambda x: left(x) - right(x)
        if node.op == "*":
            return lambda x: left(x) * right(x)
        return lambda x: left(x) / right(x)
    raise TypeError(f"unknown node type {type(node).__name__}")


def evaluate(node: ExprNode, x: Any, backend: NumericBackend = FLOAT) -> Any:
    return compile_scalar(node, backend)(x)


def eval_jet(
    node: ExprNode,
    point: Any,
    degree: int,
    backend: NumericBackend = FLOAT,
) -> TaylorJet:
    """
    Taylor jet of the expression at `point`: coeffs[k] = g^(k)(point)/k!.

    Raises SingularPointError when a node has no derivative at the point
    (abs or sqrt at 0) and ExprDomainError outside a function's real domain.
    """
    anchor = backend.number(point)
    return _jet(node, anchor, degree, backend)


def _jet(node: ExprNode, anchor: Any, degree: int, backend: NumericBackend) -> TaylorJet:
    if isinstance(node, Constant):
        return TaylorJet.constant(_constant_value(node, backend), anchor, degree)
    if isinstance(node, Variable):
        return TaylorJet.variable(anchor, degree)
    if isinstance(node, Negate):
        return -_jet(node.operand, anchor, degree, backend)

    if isinstance(node, Call):
        inner = _jet(node.arg, anchor, degree, backend)
        try:
            return elementary.FUNCTIONS[node.func](inner, backend)
        except NonSmoothError:
            raise SingularPointError(to_text(node), anchor) from None
        except (ValueError, ArithmeticError):
            raise ExprDomainError(to_text(node), inner.value) from None

    if isinstance(node, BinaryOp):
        left = _jet(node.left, anchor, degree, backend)
        if node.op == "^":
            try:
                return elementary.power(left, node.right.value, backend)  # type: ignore[attr-defined]
            except NonSmoothError:
                raise SingularPointError(to_text(node), anchor) from None
            except (ValueError, ArithmeticError):
                raise ExprDomainError(to_text(node), left.value) from None
        right = _jet(node.right, anchor, degree, backend)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        try:
            return left / right
        except JetError:
            raise ExprDomainError(to_text(node), right.value) from None

    raise TypeError(f"unknown node type {type(node).__name__}")
