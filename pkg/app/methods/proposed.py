"""
The proposed one-evaluation family: U⁺ = U − Σ c_k g(U)^k.
"""

from __future__ import annotations

from typing import Any

from app.domain.errors import NumericalFailure
from app.domain.series import MethodCoefficients, is_finite


def proposed_step(x: Any, g_of_x: Any, coeffs: MethodCoefficients) -> Any:
    """One update from the caller-supplied g(x); no evaluation happens here."""
    acc = 0
    for c in reversed(coeffs.c):
        acc = acc * g_of_x + c
    x_new = x - acc * g_of_x
    if not is_finite(x_new):
        raise NumericalFailure(f"non-finite update from x = {x!r}")
    return x_new
