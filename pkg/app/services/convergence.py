"""
Convergence diagnostics — empirical order, efficiency index, contact-order fits
and extended-precision reruns of the proposed iteration.
"""

from __future__ import annotations

import logging
from typing import Any, Sequence

import mpmath  # type: ignore
import numpy as np  # type: ignore

from app.config import settings
from app.domain.errors import InsufficientTraceError
from app.domain.models import ProblemSpec
from app.expr.evaluate import compile_scalar
from app.expr.problem import bundle_at_root
from app.methods.proposed import proposed_step
from app.series.backend import MPMATH
from app.series.reversion import revert_series

logger = logging.getLogger(__name__)


def estimate_coc(trace: Sequence[Any], root: Any, floor: Any = 0) -> float | None:
    """
    ln(e_{k+1}/e_k) / ln(e_k/e_{k−1}) on the last usable triple of errors.

    Errors at or below `floor` count as underflow. Returns None when no triple
    of distinct errors above the floor exists.
    """
    if len(trace) < 4:
        raise InsufficientTraceError(f"need at least 4 iterates, got {len(trace)}")

    root = mpmath.mpf(root)
    errors = [abs(mpmath.mpf(x) - root) for x in trace]
    for k in range(len(errors) - 1, 1, -1):
        e_prev, e_mid, e_last = errors[k - 2], errors[k - 1], errors[k]
        if min(e_prev, e_mid, e_last) <= floor:
            continue
        if e_prev == e_mid or e_mid == e_last:
            continue
        denominator = mpmath.log(e_mid / e_prev)
        if denominator == 0:
            continue
        return float(mpmath.log(e_last / e_mid) / denominator)
    return None


def efficiency_index(order: int, evals_per_step: int) -> float:
    """n^(1/q): order per function evaluation."""
    if order < 1 or evals_per_step < 1:
        raise ValueError(f"order and evaluations must be ≥ 1, got ({order}, {evals_per_step})")
    return order ** (1.0 / evals_per_step)


def fit_contact_order(errors_in: Sequence[float], errors_out: Sequence[float]) -> float:
    """Slope of log|φ(l+e) − l| against log|e|."""
    x = np.log(np.abs(np.asarray(errors_in, dtype=float)))
    y = np.log(np.abs(np.asarray(errors_out, dtype=float)))
    slope, _intercept = np.polyfit(x, y, 1)
    return float(slope)


def extended_trace(
    problem: ProblemSpec,
    order: int,
    x0: Any,
    steps: int,
    dps: int | None = None,
) -> list[Any]:
    """
    The proposed order-n iteration rerun in mpmath at `dps` digits.

    Bundle, reversion and every g evaluation use extended precision, so the
    trace resolves errors far below double-precision round-off.
    """
    dps = dps or settings.extended_dps
    with mpmath.workdps(dps):
        bundle = bundle_at_root(problem, order - 1, backend=MPMATH)
        coeffs = revert_series(bundle, order)
        g = compile_scalar(problem.expression, MPMATH)
        x = mpmath.mpf(x0)
        trace = [x]
        for _ in range(steps):
            gx = g(x)
            if gx == 0:
                break
            x = proposed_step(x, gx, coeffs)
            trace.append(x)
    logger.debug("Extended trace of order %d at %d digits: %d iterates", order, dps, len(trace))
    return trace
