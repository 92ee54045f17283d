"""
Method service — turns method tokens into MethodKind values.
Single Responsibility: only handles method construction.

`order2` … `order8` build the proposed family from the root bundle; any
other token must name a baseline.
"""

import logging
import re

from app.config import settings  # type: ignore
from app.domain.enums import DerivativeSource, MethodName, ReversionMethod  # type: ignore
from app.domain.errors import UnknownMethodError, UnsupportedOrderError  # type: ignore
from app.domain.models import MethodKind, ProblemSpec  # type: ignore
from app.expr.problem import bundle_at_root  # type: ignore
from app.series.reversion import revert_series  # type: ignore

logger = logging.getLogger(__name__)

_ORDER_TOKEN = re.compile(r"^order(\d+)$")


class MethodService:
    """Builds proposed(n) from a problem's bundle and resolves baseline names."""

    def __init__(self, reversion: ReversionMethod = ReversionMethod.NEWTON) -> None:
        self._reversion = reversion

    def proposed(self, problem: ProblemSpec, order: int) -> MethodKind:
        if order < 2 or order > settings.max_order:
            raise UnsupportedOrderError(
                f"order must be between 2 and {settings.max_order}, got {order}"
            )
        bundle = bundle_at_root(problem, order - 1)
        coefficients = revert_series(bundle, order, self._reversion)
        logger.info("Built order-%d method for %s at l=%r", order, problem.text, problem.root)
        differentiated = order - 1 if problem.source == DerivativeSource.AUTO_JET else 0
        return MethodKind.proposed(coefficients, bundle_evals=differentiated)

    def resolve(self, problem: ProblemSpec, token: str) -> MethodKind:
        """`order<n>` or a baseline name → MethodKind."""
        token = token.strip().lower()
        match = _ORDER_TOKEN.match(token)
        if match:
            return self.proposed(problem, int(match.group(1)))
        try:
            name = MethodName(token)
        except ValueError:
            raise UnknownMethodError(f"unknown method '{token}'") from None
        if name == MethodName.PROPOSED:
            raise UnknownMethodError("use order<n> to select the proposed family")
        return MethodKind.baseline(name)


def known_tokens() -> list[str]:
    proposed = [f"order{n}" for n in range(2, settings.max_order + 1)]
    return proposed + [m.value for m in MethodName if m != MethodName.PROPOSED]
