"""
Expression grammar, parser and canonical printer.

Precedence, tightest first: ^, unary minus, * /, + -. Binary operators are
left-associative except ^, whose right operand must fold to a constant.
"""

from __future__ import annotations

import logging
import math

from lark import Lark, Token, Transformer, v_args  # type: ignore
from lark.exceptions import UnexpectedInput, VisitError  # type: ignore

from app.domain.errors import ExprError, ExprSyntaxError, UnknownIdentifierError
from app.domain.expr_nodes import (
    CONSTANTS,
    FUNCTIONS,
    VARIABLE,
    BinaryOp,
    Call,
    Constant,
    ExprNode,
    Negate,
    Variable,
)

logger = logging.getLogger(__name__)

GRAMMAR = r"""
?start: sum

?sum: product
    | sum "+" product       -> add
    | sum "-" product       -> sub

?product: unary
    | product "*" unary     -> mul
    | product "/" unary     -> div

?unary: power
    | "-" unary             -> neg
    | "+" unary

?power: atom
    | atom "^" exponent     -> pow

?exponent: power
    | "-" exponent          -> neg
    | "+" exponent

?atom: NUMBER               -> number
    | NAME "(" sum ")"      -> call
    | NAME                  -> name
    | "(" sum ")"

NAME: /[A-Za-z_][A-Za-z_0-9]*/

%import common.NUMBER
%import common.WS
%ignore WS
"""

_NAMED_VALUES = {"pi": math.pi, "e": math.e}


def _fold(node: ExprNode) -> float | None:
    """Value of a variable-free arithmetic subtree, None if it is not one."""
    if isinstance(node, Constant):
        return node.value
    if isinstance(node, Negate):
        inner = _fold(node.operand)
        return None if inner is None else -inner
    if isinstance(node, BinaryOp):
        left, right = _fold(node.left), _fold(node.right)
        if left is None or right is None:
            return None
        try:
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            if node.op == "*":
                return left * right
            if node.op == "/":
                return left / right
            result = left**right
            return None if isinstance(result, complex) else result
        except (ArithmeticError, ValueError):
            return None
    return None


class _TreeBuilder(Transformer):
    def number(self, children: list[Token]) -> Constant:
        token = children[0]
        value = float(token)
        if not math.isfinite(value):
            raise ExprSyntaxError(f"number {token!s} out of range", token.start_pos)
        return Constant(value)

    def name(self, children: list[Token]) -> ExprNode:
        token = children[0]
        if token == VARIABLE:
            return Variable()
        if token in CONSTANTS:
            return Constant(_NAMED_VALUES[str(token)], symbol=str(token))
        raise UnknownIdentifierError(str(token), token.start_pos)

    def call(self, children: list) -> Call:
        token, arg = children
        if token not in FUNCTIONS:
            raise UnknownIdentifierError(str(token), token.start_pos)
        return Call(str(token), arg)

    def neg(self, children: list) -> Negate:
        return Negate(children[0])

    def add(self, children: list) -> BinaryOp:
        return BinaryOp("+", *children)

    def sub(self, children: list) -> BinaryOp:
        return BinaryOp("-", *children)

    def mul(self, children: list) -> BinaryOp:
        return BinaryOp("*", *children)

    def div(self, children: list) -> BinaryOp:
        return BinaryOp("/", *children)

    @v_args(meta=True)
    def pow(self, meta, children: list) -> BinaryOp:
        base, exponent = children
        value = _fold(exponent)
        if value is None or not math.isfinite(value):
            offset = 0 if getattr(meta, "empty", True) else meta.start_pos
            raise ExprSyntaxError("exponent of ^ must be a constant", offset)
        return BinaryOp("^", base, Constant(value))


_PARSER = Lark(GRAMMAR, parser="lalr", propagate_positions=True)


def _error_offset(exc: UnexpectedInput, text: str) -> int:
    token = getattr(exc, "token", None)
    if token is not None and getattr(token, "type", None) == "$END":
        return len(text)
    pos = getattr(exc, "pos_in_stream", None)
    if pos is None or pos < 0:
        return len(text)
    return pos


def parse(text: str) -> ExprNode:
    """Parse a function of `x` into an ExprNode tree."""
    if not text or not text.strip():
        raise ExprSyntaxError("empty expression", 0)
    try:
        tree = _PARSER.parse(text)
    except UnexpectedInput as exc:
        offset = _error_offset(exc, text)
        raise ExprSyntaxError("syntax error", offset) from None
    try:
        node = _TreeBuilder().transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, ExprError):
            raise exc.orig_exc from None
        raise
    logger.debug("Parsed %r → %s", text, to_text(node))
    return node


def to_text(node: ExprNode) -> str:
    """Canonical fully parenthesised form; parse(to_text(t)) == t."""
    if isinstance(node, Constant):
        if node.symbol:
            return node.symbol
        text = repr(node.value)
        return f"({text})" if math.copysign(1.0, node.value) < 0 else text
    if isinstance(node, Variable):
        return node.name
    if isinstance(node, Negate):
        return f"(-{to_text(node.operand)})"
    if isinstance(node, BinaryOp):
        return f"({to_text(node.left)} {node.op} {to_text(node.right)})"
    if isinstance(node, Call):
        return f"{node.func}({to_text(node.arg)})"
    raise TypeError(f"unknown node type {type(node).__name__}")
