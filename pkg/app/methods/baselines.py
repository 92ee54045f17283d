"""
Classic baselines. Each step receives g(x) from the driver and asks the
evaluator for whatever else it needs, so the evaluator counters reflect
the true per-step cost.

df4 / df8 are the Kung–Traub derivative-free family built on inverse
interpolation: w = x + g(x), a Steffensen secant step to y, then inverse
quadratic (df4) and inverse cubic (df8) interpolation through the points
gathered so far, evaluated at g = 0.
"""

from __future__ import annotations

import sys
from typing import Any, Callable

from app.domain.errors import NumericalFailure
from app.ports.evaluator_port import EvaluatorPort

StepFn = Callable[[Any, Any, EvaluatorPort], Any]

_EPS = sys.float_info.epsilon
# g values this close to zero are round-off at x, not signal
_ROUNDOFF = 64 * _EPS


def _nonzero(value: Any, what: str) -> Any:
    if value == 0:
        raise NumericalFailure(f"zero {what}")
    return value


def _not_small(value: Any, scale: Any, what: str, rel: float = _EPS) -> Any:
    """Reject a denominator that is zero or negligible next to `scale`."""
    if value == 0 or abs(value) <= rel * abs(scale):
        raise NumericalFailure(f"near-zero {what}: {value!r}")
    return value


def newton_step(x: Any, gx: Any, ev: EvaluatorPort) -> Any:
    (d1,) = ev.derivatives(x, 1)
    return x - gx / _nonzero(d1, "derivative")


def halley_step(x: Any, gx: Any, ev: EvaluatorPort) -> Any:
    d1, d2 = ev.derivatives(x, 2)
    lead, correction = 2 * d1 * d1, gx * d2
    denom = _not_small(lead - correction, max(abs(lead), abs(correction)), "Halley denominator", _ROUNDOFF)
    return x - 2 * gx * d1 / denom


def chebyshev_step(x: Any, gx: Any, ev: EvaluatorPort) -> Any:
    d1, d2 = ev.derivatives(x, 2)
    _not_small(d1, gx, "derivative")
    return x - gx / d1 - gx * gx * d2 / (2 * d1**3)


def two_step_newton_step(x: Any, gx: Any, ev: EvaluatorPort) -> Any:
    """Newton predictor followed by a corrector that reuses g'(x)."""
    (d1,) = ev.derivatives(x, 1)
    _nonzero(d1, "derivative")
    y = x - gx / d1
    return y - ev.value(y) / d1


def _inverse_interpolate(points: list[tuple[Any, Any]]) -> Any:
    """Value at t = 0 of the polynomial through (t_i, x_i), via divided differences."""
    ts = [t for t, _ in points]
    table = [x for _, x in points]
    n = len(points)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            gap = _nonzero(ts[i] - ts[i - level], "gap between interpolation nodes")
            table[i] = (table[i] - table[i - 1]) / gap
    result = table[n - 1]
    for i in range(n - 2, -1, -1):
        result = result * (0 - ts[i]) + table[i]
    return result


def _kung_traub(x: Any, gx: Any, ev: EvaluatorPort, points_wanted: int) -> Any:
    if gx == 0:
        return x
    w = x + gx
    gw = ev.value(w)
    if gw == gx:
        # g is flat at working precision: x is already a root up to round-off
        if abs(gx) <= _ROUNDOFF * max(1.0, abs(x)):
            return x
        raise NumericalFailure(f"zero Steffensen divided difference at x = {x!r}")
    y = x - gx * gx / (gw - gx)
    gy = ev.value(y)
    if gy == 0:
        return y
    points = [(gx, x), (gw, w), (gy, y)]
    if _collapsed(points):
        return _best(points)
    z = _inverse_interpolate(points)
    if points_wanted == 3:
        return z
    gz = ev.value(z)
    if gz == 0:
        return z
    points.append((gz, z))
    if _collapsed(points):
        return _best(points)
    return _inverse_interpolate(points)


def _collapsed(points: list[tuple[Any, Any]]) -> bool:
    """Two nodes share a g value; only happens once g is down to round-off."""
    values = [t for t, _ in points]
    return len(set(values)) < len(values)


def _best(points: list[tuple[Any, Any]]) -> Any:
    return min(points, key=lambda p: abs(p[0]))[1]


def df4_step(x: Any, gx: Any, ev: EvaluatorPort) -> Any:
    """Optimal derivative-free fourth order, three evaluations per step."""
    return _kung_traub(x, gx, ev, 3)


def df8_step(x: Any, gx: Any, ev: EvaluatorPort) -> Any:
    """Optimal derivative-free eighth order, four evaluations per step."""
    return _kung_traub(x, gx, ev, 4)
