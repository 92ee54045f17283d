"""
Numeric value types of the series core.

Coefficients are kept generic (float or mpmath.mpf) so the same types carry
double-precision runs and extended-precision oracles. All types are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence

from app.domain.errors import JetError, MultipleRootError


def is_finite(value: Any) -> bool:
    """math.isfinite for floats and anything with __float__ (mpf included)."""
    try:
        return math.isfinite(value)
    except (TypeError, OverflowError):
        return False


@dataclass(frozen=True)
class DerivativeBundle:
    """
    g'(l), g''(l), …, g^(m)(l) at the root l.

    Entries are plain derivatives, NOT divided by factorials; the series core
    applies the k! scaling itself.
    """

    root: Any
    derivs: tuple[Any, ...]

    def __post_init__(self) -> None:
        derivs = tuple(self.derivs)
        object.__setattr__(self, "derivs", derivs)
        if not derivs:
            raise JetError("a derivative bundle needs at least g'(l)")
        if not all(is_finite(d) for d in derivs):
            raise JetError(f"non-finite derivative in bundle: {derivs!r}")
        if derivs[0] == 0:
            raise MultipleRootError(self.root)

    @property
    def m(self) -> int:
        """Highest derivative order carried."""
        return len(self.derivs)

    def truncated(self, m: int) -> DerivativeBundle:
        if m >= self.m:
            return self
        return DerivativeBundle(root=self.root, derivs=self.derivs[:m])


@dataclass(frozen=True)
class MethodCoefficients:
    """
    Correction coefficients c₁…c₍ₙ₋₁₎ of the order-n step
    U⁺ = U − Σ c_k · g(U)^k.
    """

    order: int
    c: tuple[Any, ...]

    def __post_init__(self) -> None:
        c = tuple(self.c)
        object.__setattr__(self, "c", c)
        if self.order < 2:
            raise ValueError(f"method order must be ≥ 2, got {self.order}")
        if len(c) != self.order - 1:
            raise ValueError(
                f"order {self.order} needs {self.order - 1} coefficients, got {len(c)}"
            )
        if not all(is_finite(v) for v in c):
            raise JetError(f"non-finite method coefficient: {c!r}")


@dataclass(frozen=True)
class FSpaceCorrection:
    """α, β, γ of the fixed-point form f(U) + α(f(U)−U) + β(f(U)−U)² + γ(f(U)−U)³."""

    alpha: Any
    beta: Any | None = None
    gamma: Any | None = None

    def terms(self) -> list[Any]:
        return [t for t in (self.alpha, self.beta, self.gamma) if t is not None]


def factorial_scaled(derivs: Sequence[Any]) -> list[Any]:
    """Plain derivatives g^(k) → Taylor coefficients g^(k)/k!, k = 1…m."""
    return [d / math.factorial(k) for k, d in enumerate(derivs, start=1)]
