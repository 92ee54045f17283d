"""Truncated Taylor jets and the elementary functions on them."""

import math

import mpmath  # type: ignore
import numpy as np  # type: ignore
import pytest

from app.domain.errors import JetError, NonSmoothError  # type: ignore
from app.expr.evaluate import compile_scalar, eval_jet  # type: ignore
from app.expr.parser import parse  # type: ignore
from app.series import elementary  # type: ignore
from app.series.backend import MPMATH  # type: ignore
from app.series.jet import TaylorJet, compose  # type: ignore


def test_product_truncates_to_degree():
    a = TaylorJet(0.0, (1.0, 2.0))
    b = TaylorJet(0.0, (3.0, 4.0))
    assert (a * b).coeffs == (3.0, 10.0)


def test_exp_composed_with_log_is_identity():
    exp_at_0 = TaylorJet(0.0, (1.0, 1.0, 0.5))
    log_at_1 = TaylorJet(1.0, (0.0, 1.0, -0.5))
    result = compose(log_at_1, exp_at_0)
    assert result.anchor == 0.0
    assert result.coeffs == pytest.approx([0.0, 1.0, 0.0])


def test_adding_zero_changes_nothing():
    a = TaylorJet(2.0, (5.0, -1.0, 0.25))
    assert (a + 0) == a
    assert (0 + a) == a


def test_mixed_degrees_truncate_to_shared_degree():
    a = TaylorJet(0.0, (1.0, 1.0, 1.0, 1.0))
    b = TaylorJet(0.0, (2.0, 3.0))
    assert (a + b).coeffs == (3.0, 4.0)


def test_anchor_mismatch_rejected():
    with pytest.raises(JetError, match="anchor"):
        TaylorJet(0.0, (1.0,)) + TaylorJet(1.0, (1.0,))


def test_division_by_zero_constant_term_rejected():
    x = TaylorJet.variable(0.0, 3)
    with pytest.raises(JetError):
        1 / x


def test_geometric_series_from_division():
    x = TaylorJet.variable(0.0, 5)
    assert (1 / (1 - x)).coeffs == pytest.approx([1.0] * 6)


def test_integer_powers():
    x = TaylorJet.variable(1.0, 3)
    assert (x**3).coeffs == pytest.approx([1.0, 3.0, 3.0, 1.0])
    assert (x**0).coeffs == pytest.approx([1.0, 0.0, 0.0, 0.0])
    assert (x**-1).coeffs == pytest.approx([1.0, -1.0, 1.0, -1.0])


def test_compose_needs_matching_point():
    with pytest.raises(JetError):
        compose(TaylorJet(1.0, (0.0, 1.0)), TaylorJet(0.0, (0.0, 1.0)))


def test_non_finite_coefficients_rejected():
    with pytest.raises(JetError):
        TaylorJet(0.0, (math.nan,))


def test_derivatives_undo_factorials():
    jet = TaylorJet(0.0, (0.0, 1.0, 0.0, -1.0 / 3.0))
    assert jet.derivatives() == pytest.approx([0.0, 1.0, 0.0, -2.0])


def test_abs_and_sqrt_have_no_derivative_at_zero():
    x = TaylorJet.variable(0.0, 2)
    with pytest.raises(NonSmoothError):
        elementary.absolute(x)
    with pytest.raises(NonSmoothError):
        elementary.sqrt(x)
    assert elementary.absolute(x.truncated(0)).coeffs == (0.0,)


def test_ln_of_negative_is_a_domain_error():
    with pytest.raises(ValueError):
        elementary.ln(TaylorJet.variable(-1.0, 2))


def test_fractional_power_matches_sqrt():
    x = TaylorJet.variable(4.0, 4)
    assert elementary.power(x, 0.5).coeffs == pytest.approx(elementary.sqrt(x).coeffs)


# ── finite-difference agreement ───────────────────────────────

CASES = [
    ("sin(x)", (-3.0, 3.0)),
    ("cos(x)", (-3.0, 3.0)),
    ("tan(x)", (-1.3, 1.3)),
    ("atan(x)", (-5.0, 5.0)),
    ("exp(x)", (-3.0, 3.0)),
    ("ln(x)", (0.2, 5.0)),
    ("sqrt(x)", (0.2, 5.0)),
    ("abs(x)", (0.2, 5.0)),
    ("abs(x)", (-5.0, -0.2)),
    ("x^2.5", (0.2, 5.0)),
    ("x^-3", (0.2, 5.0)),
    ("exp(sin(x))/(1+x^2)", (-2.0, 2.0)),
    ("sqrt(abs(x))-4", (1.0, 30.0)),
]


@pytest.mark.parametrize("text,domain", CASES)
def test_jet_coefficients_match_differentiation(text, domain):
    node = parse(text)
    rng = np.random.default_rng(sum(map(ord, text)))
    points = rng.uniform(*domain, size=100)
    with mpmath.workdps(30):
        g = compile_scalar(node, MPMATH)
        for point in points:
            jet = eval_jet(node, float(point), 4)
            oracle = list(mpmath.diffs(g, mpmath.mpf(float(point)), 4))
            for k in range(1, 5):
                expected = float(oracle[k]) / math.factorial(k)
                assert jet.coeffs[k] == pytest.approx(expected, rel=1e-6, abs=1e-9)


@pytest.mark.parametrize("text", ["atan(x)", "sqrt(abs(x))-4", "exp(x)-1", "x^3-2*x+1", "tan(x)/(2+cos(x))"])
def test_degree_zero_jet_is_scalar_value(text):
    node = parse(text)
    for point in (0.3, 1.7, 2.9):
        assert eval_jet(node, point, 0).coeffs[0] == pytest.approx(compile_scalar(node)(point), rel=1e-15)
