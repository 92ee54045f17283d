"""
Domain exceptions.

Services raise these; the iteration driver turns step failures into report
statuses and the CLI layer turns everything else into exit codes.
"""

from __future__ import annotations


class RootJetError(Exception):
    """Base class for every error raised by the toolkit."""


# ── Series core ───────────────────────────────────────────────


class JetError(RootJetError, ValueError):
    """Anchor mismatch, division by a zero-constant series, or a non-finite coefficient."""


class NonSmoothError(JetError):
    """A jet was requested at a point where the function has no derivative."""


class MultipleRootError(RootJetError, ValueError):
    """g'(l) = 0: the correction coefficients divide by powers of g'(l)."""

    def __init__(self, root: float | None = None) -> None:
        where = f" at l = {root!r}" if root is not None else ""
        super().__init__(f"g'(l) = 0{where}: multiple root, method undefined")
        self.root = root


class InsufficientDerivativesError(RootJetError, ValueError):
    def __init__(self, needed: int, available: int) -> None:
        super().__init__(
            f"order needs {needed} derivative(s) at the root, only {available} available"
        )
        self.needed = needed
        self.available = available


class UnsupportedOrderError(RootJetError, ValueError):
    """Requested order outside the supported range."""


class UnknownMethodError(RootJetError, ValueError):
    """Method token that names neither order<n> nor a baseline."""


# ── Expressions ───────────────────────────────────────────────


class ExprError(RootJetError, ValueError):
    """Base class for parse and evaluation errors of user expressions."""


class ExprSyntaxError(ExprError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownIdentifierError(ExprError):
    def __init__(self, name: str, offset: int) -> None:
        super().__init__(f"unknown identifier '{name}' at offset {offset}")
        self.name = name
        self.offset = offset


class SingularPointError(ExprError):
    """Raised when a node is not differentiable at the requested point."""

    def __init__(self, node_text: str, point: object) -> None:
        super().__init__(f"{node_text} is not differentiable at {point}")
        self.node_text = node_text
        self.point = point


class ExprDomainError(ExprError):
    def __init__(self, node_text: str, value: object) -> None:
        super().__init__(f"{node_text} is undefined for argument {value}")
        self.node_text = node_text
        self.value = value


class MissingRootError(RootJetError, ValueError):
    def __init__(self, expression: str) -> None:
        super().__init__(
            f"derivatives of {expression} at the root need the root l (pass --root or explicit derivatives)"
        )


class RootSanityError(RootJetError, ValueError):
    def __init__(self, root: float, residual: float, tolerance: float) -> None:
        super().__init__(
            f"l = {root!r} is not a root: |g(l)| = {residual:.3e} > {tolerance:.3e}"
        )
        self.root = root
        self.residual = residual


# ── Solver ────────────────────────────────────────────────────


class NumericalFailure(RootJetError, ArithmeticError):
    """A step produced a zero denominator or a non-finite value."""

    def __init__(self, message: str, step: int | None = None) -> None:
        super().__init__(message)
        self.step = step


class InsufficientTraceError(RootJetError, ValueError):
    pass


# ── Bench ─────────────────────────────────────────────────────


class SuiteSpecError(RootJetError, ValueError):
    pass
