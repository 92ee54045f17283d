"""
Truncated Taylor jets.

A jet of degree N at anchor a holds c₀…c_N with c_k = f^(k)(a)/k!. Arithmetic
between jets truncates to the smaller degree. Coefficients stay generic so the
same code runs on floats and on mpmath numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence

from app.domain.errors import JetError
from app.domain.series import is_finite

Scalar = Any


@dataclass(frozen=True)
class TaylorJet:
    anchor: Scalar
    coeffs: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise JetError("a jet needs at least the constant coefficient")
        if not all(is_finite(c) for c in coeffs):
            raise JetError(f"non-finite jet coefficient at anchor {self.anchor!r}: {coeffs!r}")

    # ── Construction ──────────────────────────────────────────

    @classmethod
    def variable(cls, anchor: Scalar, degree: int, one: Scalar = 1) -> TaylorJet:
        """The identity x ↦ x expanded at `anchor`."""
        if degree < 0:
            raise JetError(f"jet degree must be ≥ 0, got {degree}")
        coeffs = [anchor] + [one * 0] * degree
        if degree >= 1:
            coeffs[1] = one
        return cls(anchor, tuple(coeffs))

    @classmethod
    def constant(cls, value: Scalar, anchor: Scalar, degree: int) -> TaylorJet:
        if degree < 0:
            raise JetError(f"jet degree must be ≥ 0, got {degree}")
        return cls(anchor, (value,) + (value * 0,) * degree)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def value(self) -> Scalar:
        return self.coeffs[0]

    def truncated(self, degree: int) -> TaylorJet:
        if degree >= self.degree:
            return self
        return TaylorJet(self.anchor, self.coeffs[: degree + 1])

    def derivatives(self) -> list[Scalar]:
        """Plain derivatives f(a), f'(a), …, f^(N)(a)."""
        return [c * math.factorial(k) for k, c in enumerate(self.coeffs)]

    def _like(self, coeffs: Sequence[Scalar]) -> TaylorJet:
        return TaylorJet(self.anchor, tuple(coeffs))

    # ── Arithmetic ────────────────────────────────────────────

    def _align(self, other: TaylorJet | Scalar) -> tuple[tuple, tuple]:
        if isinstance(other, TaylorJet):
            if other.anchor != self.anchor:
                raise JetError(
                    f"anchor mismatch: {self.anchor!r} vs {other.anchor!r}"
                )
            n = min(self.degree, other.degree) + 1
            return self.coeffs[:n], other.coeffs[:n]
        zero = other * 0
        return self.coeffs, (other,) + (zero,) * self.degree

    def __add__(self, other: TaylorJet | Scalar) -> TaylorJet:
        a, b = self._align(other)
        return self._like([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __sub__(self, other: TaylorJet | Scalar) -> TaylorJet:
        a, b = self._align(other)
        return self._like([x - y for x, y in zip(a, b)])

    def __rsub__(self, other: Scalar) -> TaylorJet:
        return (-self) + other

    def __neg__(self) -> TaylorJet:
        return self._like([-c for c in self.coeffs])

    def __mul__(self, other: TaylorJet | Scalar) -> TaylorJet:
        if not isinstance(other, TaylorJet):
            return self._like([c * other for c in self.coeffs])
        a, b = self._align(other)
        return self._like(
            [sum(a[j] * b[k - j] for j in range(k + 1)) for k in range(len(a))]
        )

    __rmul__ = __mul__

    def __truediv__(self, other: TaylorJet | Scalar) -> TaylorJet:
        if not isinstance(other, TaylorJet):
            if other == 0:
                raise JetError("division of a jet by zero")
            return self._like([c / other for c in self.coeffs])
        a, b = self._align(other)
        if b[0] == 0:
            raise JetError("division by a series with zero constant term")
        q: list[Scalar] = []
        for k in range(len(a)):
            acc = a[k] - sum(b[j] * q[k - j] for j in range(1, k + 1))
            q.append(acc / b[0])
        return self._like(q)

    def __rtruediv__(self, other: Scalar) -> TaylorJet:
        return TaylorJet.constant(other, self.anchor, self.degree) / self

    def __pow__(self, exponent: int) -> TaylorJet:
        """Integer powers by repeated squaring; real exponents live in `elementary.power`."""
        if not isinstance(exponent, int):
            raise JetError(f"TaylorJet ** needs an integer exponent, got {exponent!r}")
        if exponent < 0:
            return 1 / (self ** (-exponent))
        result = TaylorJet.constant(self.coeffs[0] * 0 + 1, self.anchor, self.degree)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # ── Calculus helpers ──────────────────────────────────────

    def differentiate(self) -> TaylorJet:
        """Jet of f' at the same anchor, one degree lower."""
        if self.degree == 0:
            raise JetError("cannot differentiate a degree-0 jet")
        return self._like([k * self.coeffs[k] for k in range(1, len(self.coeffs))])

    def integrate(self, constant: Scalar) -> TaylorJet:
        """Antiderivative with the given value at the anchor, one degree higher."""
        return self._like(
            [constant] + [c / (k + 1) for k, c in enumerate(self.coeffs)]
        )


def compose(outer: TaylorJet, inner: TaylorJet) -> TaylorJet:
    """
    Jet of outer ∘ inner at inner's anchor.

    The constant term of `inner` must equal the anchor of `outer`.
    """
    if inner.coeffs[0] != outer.anchor:
        raise JetError(
            f"composition needs inner value {inner.coeffs[0]!r} == outer anchor {outer.anchor!r}"
        )
    degree = min(outer.degree, inner.degree)
    shift = (inner - inner.coeffs[0]).truncated(degree)
    result = TaylorJet.constant(outer.coeffs[degree], inner.anchor, degree)
    for k in range(degree - 1, -1, -1):
        result = result * shift + outer.coeffs[k]
    return result
