import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from app.dependencies import get_bench_service, get_method_service, get_solver_service  # type: ignore  # noqa: E402
from app.expr.problem import make_problem  # type: ignore  # noqa: E402


@pytest.fixture
def atan_problem():
    return make_problem("atan(x)", root=0.0)


@pytest.fixture
def sqrt_problem():
    return make_problem("sqrt(abs(x))-4", root=16.0)


@pytest.fixture
def expm1_problem():
    return make_problem("exp(x)-1", root=0.0)


@pytest.fixture
def methods():
    return get_method_service()


@pytest.fixture
def solver():
    return get_solver_service()


@pytest.fixture
def bench():
    return get_bench_service(workers=2)
