"""
Problem construction and the derivative bundle at the root.

The bundle is the only place where g is differentiated for the proposed
methods. In double precision the jet at the root is taken once per problem,
at the highest supported degree, and every order truncates that one bundle.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Sequence

from app.config import settings
from app.domain.enums import DerivativeSource
from app.domain.errors import InsufficientDerivativesError, MissingRootError, RootSanityError
from app.domain.models import ProblemSpec
from app.domain.series import DerivativeBundle
from app.expr.evaluate import eval_jet
from app.expr.parser import parse
from app.series.backend import FLOAT, NumericBackend

logger = logging.getLogger(__name__)

_FULL_DEGREE = settings.max_order - 1


def make_problem(
    text: str,
    root: float | None = None,
    derivatives: Sequence[float] | None = None,
) -> ProblemSpec:
    """Parse `text` and attach the root information."""
    return ProblemSpec(
        text=text,
        expression=parse(text),
        root=root,
        derivatives=tuple(derivatives) if derivatives is not None else None,
    )


def bundle_at_root(
    problem: ProblemSpec,
    m: int,
    backend: NumericBackend = FLOAT,
) -> DerivativeBundle:
    """g'(l) … g^(m)(l) from explicit values or from a jet of the expression at l."""
    if backend is FLOAT and problem.source == DerivativeSource.AUTO_JET and 1 <= m <= _FULL_DEGREE:
        return _root_bundle(problem).truncated(m)
    return _compute_bundle(problem, m, backend)


@lru_cache(maxsize=256)
def _root_bundle(problem: ProblemSpec) -> DerivativeBundle:
    return _compute_bundle(problem, _FULL_DEGREE, FLOAT)


def _compute_bundle(problem: ProblemSpec, m: int, backend: NumericBackend) -> DerivativeBundle:
    if m < 1:
        raise InsufficientDerivativesError(1, m)

    if problem.source == DerivativeSource.EXPLICIT:
        values = problem.derivatives or ()
        if len(values) < m:
            raise InsufficientDerivativesError(m, len(values))
        root = problem.root if problem.root is not None else 0.0
        return DerivativeBundle(
            root=backend.number(root),
            derivs=tuple(backend.number(v) for v in values[:m]),
        )

    if problem.root is None:
        raise MissingRootError(problem.text)
    jet = eval_jet(problem.expression, problem.root, m, backend)
    residual = abs(jet.value)
    tolerance = settings.root_sanity_tol * max(1.0, abs(problem.root))
    if residual > tolerance:
        raise RootSanityError(problem.root, float(residual), tolerance)

    bundle = DerivativeBundle(root=jet.anchor, derivs=tuple(jet.derivatives()[1:]))
    logger.debug("Bundle for %s at l=%r (m=%d, %s): %r", problem.text, problem.root, m, backend.name, bundle.derivs)
    return bundle
