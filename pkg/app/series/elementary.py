"""
Elementary functions lifted to Taylor jets.

Each function takes a jet and a NumericBackend (the backend supplies the value
at the anchor; higher coefficients follow from the usual ODE recurrences).
Domain violations raise ValueError, non-differentiable points NonSmoothError.
"""

from __future__ import annotations

from typing import Any

from app.domain.errors import JetError, NonSmoothError
from app.series.backend import FLOAT, NumericBackend
from app.series.jet import TaylorJet


def exp(a: TaylorJet, backend: NumericBackend = FLOAT) -> TaylorJet:
    b = [backend.exp(a.coeffs[0])]
    for k in range(1, a.degree + 1):
        b.append(sum(j * a.coeffs[j] * b[k - j] for j in range(1, k + 1)) / k)
    return TaylorJet(a.anchor, tuple(b))


def ln(a: TaylorJet, backend: NumericBackend = FLOAT) -> TaylorJet:
    a0 = a.coeffs[0]
    if a0 <= 0:
        raise ValueError("math domain error")
    b = [backend.log(a0)]
    for k in range(1, a.degree + 1):
        acc = sum(j * b[j] * a.coeffs[k - j] for j in range(1, k))
        b.append((a.coeffs[k] - acc / k) / a0)
    return TaylorJet(a.anchor, tuple(b))


def sin_cos(a: TaylorJet, backend: NumericBackend = FLOAT) -> tuple[TaylorJet, TaylorJet]:
    s = [backend.sin(a.coeffs[0])]
    c = [backend.cos(a.coeffs[0])]
    for k in range(1, a.degree + 1):
        s.append(sum(j * a.coeffs[j] * c[k - j] for j in range(1, k + 1)) / k)
        c.append(-sum(j * a.coeffs[j] * s[k - j] for j in range(1, k + 1)) / k)
    return TaylorJet(a.anchor, tuple(s)), TaylorJet(a.anchor, tuple(c))


def sin(a: TaylorJet, backend: NumericBackend = FLOAT) -> TaylorJet:
    return sin_cos(a, backend)[0]


def cos(a: TaylorJet, backend: NumericBackend = FLOAT) -> TaylorJet:
    return sin_cos(a, backend)[1]


def tan(a: TaylorJet, backend: NumericBackend = FLOAT) -> TaylorJet:
    s, c = sin_cos(a, backend)
    try:
        t = s / c
    except JetError as exc:
        raise ValueError("tan is undefined where cos vanishes") from exc
    # value from the backend, not the quotient, so degree 0 matches scalar tan
    return TaylorJet(a.anchor, (backend.tan(a.coeffs[0]),) + t.coeffs[1:])


def atan(a: TaylorJet, backend: NumericBackend = FLOAT) -> TaylorJet:
    head = backend.atan(a.coeffs[0])
    if a.degree == 0:
        return TaylorJet(a.anchor, (head,))
    da = a.differentiate()
    rest = a.truncated(a.degree - 1)
    return (da / (1 + rest * rest)).integrate(head)


def sqrt(a: TaylorJet, backend: NumericBackend = FLOAT) -> TaylorJet:
    a0 = a.coeffs[0]
    if a0 < 0:
        raise ValueError("math domain error")
    if a0 == 0:
        if a.degree == 0:
            return TaylorJet(a.anchor, (backend.sqrt(a0),))
        raise NonSmoothError("sqrt has no derivative at 0")
    b = [backend.sqrt(a0)]
    for k in range(1, a.degree + 1):
        acc = sum(b[j] * b[k - j] for j in range(1, k))
        b.append((a.coeffs[k] - acc) / (2 * b[0]))
    return TaylorJet(a.anchor, tuple(b))


def absolute(a: TaylorJet, backend: NumericBackend = FLOAT) -> TaylorJet:
    """|a| as sign(a₀)·a away from the kink."""
    a0 = a.coeffs[0]
    if a0 == 0:
        if a.degree == 0:
            return a
        raise NonSmoothError("abs has no derivative at 0")
    return a if a0 > 0 else -a


def power(a: TaylorJet, exponent: Any, backend: NumericBackend = FLOAT) -> TaylorJet:
    """a ** exponent for a constant exponent."""
    if float(exponent).is_integer():
        n = int(exponent)
        if n < 0 and a.coeffs[0] == 0:
            raise ValueError("math domain error")
        return a ** n
    a0 = a.coeffs[0]
    if a0 < 0:
        raise ValueError("math domain error")
    if a0 == 0:
        if a.degree == 0 and exponent > 0:
            return TaylorJet(a.anchor, (a0 * 0,))
        raise NonSmoothError(f"x^{exponent} has no derivative at 0")
    b = [backend.pow(a0, exponent)]
    for k in range(1, a.degree + 1):
        acc = sum(((exponent + 1) * j - k) * a.coeffs[j] * b[k - j] for j in range(1, k + 1))
        b.append(acc / (k * a0))
    return TaylorJet(a.anchor, tuple(b))


FUNCTIONS = {
    "exp": exp,
    "ln": ln,
    "sin": sin,
    "cos": cos,
    "tan": tan,
    "atan": atan,
    "sqrt": sqrt,
    "abs": absolute,
}
