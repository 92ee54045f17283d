"""
Coefficient engine: derivatives of g at the root → correction coefficients.

The order-n update U⁺ = U − Σ c_k g(U)^k kills every error term below eⁿ
exactly when c_k are the Taylor coefficients of g⁻¹ about 0, so building a
method is a truncated series reversion. The closed forms for n ≤ 4 and the
fixed-point (f = g + x) constants are kept as independent cross-checks.
"""

from __future__ import annotations

import logging
from typing import Any

from app.config import settings
from app.domain.enums import ReversionMethod
from app.domain.errors import InsufficientDerivativesError, UnsupportedOrderError
from app.domain.series import (
    DerivativeBundle,
    FSpaceCorrection,
    MethodCoefficients,
    factorial_scaled,
)
from app.series.jet import TaylorJet, compose

logger = logging.getLogger(__name__)


def _check_order(bundle: DerivativeBundle, order: int, max_order: int) -> None:
    if order < 2 or order > max_order:
        raise UnsupportedOrderError(
            f"order must be between 2 and {max_order}, got {order}"
        )
    if bundle.m < order - 1:
        raise InsufficientDerivativesError(order - 1, bundle.m)


def _forward_jet(bundle: DerivativeBundle, order: int) -> TaylorJet:
    """Σ_{k=1}^{n−1} g^(k)(l)/k! · e^k as a jet at 0 (g(l) = 0)."""
    a = factorial_scaled(bundle.derivs[: order - 1])
    zero = a[0] * 0
    return TaylorJet(zero, (zero, *a))


def _revert_newton(forward: TaylorJet) -> TaylorJet:
    # Newton on A(B(y)) − y = 0; each pass doubles the number of exact terms.
    degree = forward.degree
    zero = forward.anchor
    y = TaylorJet.variable(zero, degree)
    inverse = y / forward.coeffs[1]
    slope = forward.differentiate()
    slope = TaylorJet(zero, slope.coeffs + (zero,))
    for _ in range(degree.bit_length() + 1):
        residual = compose(forward, inverse) - y
        inverse = inverse - residual / compose(slope, inverse)
    return inverse


def _revert_lagrange(forward: TaylorJet) -> TaylorJet:
    # c_k = (1/k)·[e^{k−1}] (e / A(e))^k
    degree = forward.degree
    zero = forward.anchor
    quotient = TaylorJet(zero, forward.coeffs[1:])  # A(e)/e, degree n−2
    reciprocal = 1 / quotient
    coeffs: list[Any] = [zero]
    for k in range(1, degree + 1):
        coeffs.append((reciprocal**k).coeffs[k - 1] / k)
    return TaylorJet(zero, tuple(coeffs))


def revert_series(
    bundle: DerivativeBundle,
    order: int,
    method: ReversionMethod = ReversionMethod.NEWTON,
    max_order: int | None = None,
) -> MethodCoefficients:
    """c₁…c₍ₙ₋₁₎ of the order-n method from the root bundle."""
    _check_order(bundle, order, max_order or settings.max_order)
    forward = _forward_jet(bundle, order)
    if method == ReversionMethod.LAGRANGE:
        inverse = _revert_lagrange(forward)
    else:
        inverse = _revert_newton(forward)
    coefficients = MethodCoefficients(order=order, c=inverse.coeffs[1:])
    logger.debug("Reverted order %d (%s) at l=%r: %r", order, method.value, bundle.root, coefficients.c)
    return coefficients


def closed_form_coefficients(bundle: DerivativeBundle, order: int) -> MethodCoefficients:
    """Hand-derived coefficients for orders 2, 3 and 4."""
    if order not in (2, 3, 4):
        raise UnsupportedOrderError(f"closed forms exist for orders 2–4 only, got {order}")
    if bundle.m < order - 1:
        raise InsufficientDerivativesError(order - 1, bundle.m)

    g1 = bundle.derivs[0]
    c: list[Any] = [1 / g1]
    if order >= 3:
        g2 = bundle.derivs[1]
        c.append(-g2 / (2 * g1**3))
    if order >= 4:
        g3 = bundle.derivs[2]
        c.append((3 * g2**2 - g1 * g3) / (6 * g1**5))
    return MethodCoefficients(order=order, c=tuple(c))


def fspace_correction(bundle: DerivativeBundle) -> FSpaceCorrection:
    """
    α, β, γ of the fixed-point form with f = g + x.

    β needs g''(l) and γ needs g'''(l); each is None when the bundle stops short.
    """
    fp = bundle.derivs[0] + 1
    gap = 1 - fp  # = −g'(l), nonzero for any valid bundle
    alpha = fp / gap
    beta = gamma = None
    if bundle.m >= 2:
        f2 = bundle.derivs[1]
        beta = -f2 / (2 * gap**3)
        if bundle.m >= 3:
            f3 = bundle.derivs[2]
            gamma = (f3 * gap + 3 * f2**2) / (6 * gap**5)
    return FSpaceCorrection(alpha=alpha, beta=beta, gamma=gamma)


def fspace_step(x: Any, g_of_x: Any, correction: FSpaceCorrection) -> Any:
    """f(U) + α(f(U)−U) + β(f(U)−U)² + γ(f(U)−U)³ where f(U) − U = g(U)."""
    result = x + g_of_x
    for power, term in enumerate(correction.terms(), start=1):
        result = result + term * g_of_x**power
    return result
