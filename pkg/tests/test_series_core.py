"""Coefficient engine: reversion, closed forms, fixed-point constants."""

import math

import mpmath  # type: ignore
import numpy as np  # type: ignore
import pytest

from app.domain.enums import ReversionMethod  # type: ignore
from app.domain.errors import (  # type: ignore
    InsufficientDerivativesError,
    JetError,
    MultipleRootError,
    UnsupportedOrderError,
)
from app.domain.series import DerivativeBundle, MethodCoefficients  # type: ignore
from app.expr.evaluate import compile_scalar  # type: ignore
from app.expr.problem import bundle_at_root, make_problem  # type: ignore
from app.methods.proposed import proposed_step  # type: ignore
from app.series.backend import MPMATH  # type: ignore
from app.series.reversion import (  # type: ignore
    closed_form_coefficients,
    fspace_correction,
    fspace_step,
    revert_series,
)
from app.services.convergence import fit_contact_order  # type: ignore

BOTH = [ReversionMethod.NEWTON, ReversionMethod.LAGRANGE]


# ── revert_series ─────────────────────────────────────────────


@pytest.mark.parametrize("method", BOTH)
def test_order_two_with_unit_slope_is_plain_fixed_point(method):
    coeffs = revert_series(DerivativeBundle(root=0.0, derivs=(1.0,)), 2, method)
    assert coeffs.c == pytest.approx([1.0])


@pytest.mark.parametrize("method", BOTH)
def test_expm1_order_four_matches_log1p_series(method):
    coeffs = revert_series(DerivativeBundle(root=0.0, derivs=(1.0, 1.0, 1.0)), 4, method)
    assert coeffs.c == pytest.approx([1.0, -0.5, 1.0 / 3.0], rel=1e-14)


@pytest.mark.parametrize("method", BOTH)
def test_brute_force_reversion_example(method):
    coeffs = revert_series(DerivativeBundle(root=0.0, derivs=(2.0, 6.0, 24.0)), 4, method)
    assert coeffs.c == pytest.approx([0.5, -0.375, 0.3125], rel=1e-14)


@pytest.mark.parametrize("method", BOTH)
def test_expm1_order_eight_alternating_harmonic(method):
    bundle = DerivativeBundle(root=0.0, derivs=(1.0,) * 7)
    coeffs = revert_series(bundle, 8, method)
    expected = [(-1) ** (k + 1) / k for k in range(1, 8)]
    assert coeffs.c == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("order", range(2, 9))
def test_expm1_every_order_up_to_eight(order):
    coeffs = revert_series(DerivativeBundle(root=0.0, derivs=(1.0,) * (order - 1)), order)
    assert len(coeffs.c) == order - 1
    assert coeffs.c == pytest.approx([(-1) ** (k + 1) / k for k in range(1, order)], rel=1e-14)


def test_atan_order_six_gives_tan_series(atan_problem):
    bundle = bundle_at_root(atan_problem, 5)
    coeffs = revert_series(bundle, 6)
    assert coeffs.c == pytest.approx([1.0, 0.0, 1.0 / 3.0, 0.0, 2.0 / 15.0], rel=1e-14, abs=1e-15)


def test_reversion_in_extended_precision():
    with mpmath.workdps(60):
        bundle = DerivativeBundle(root=mpmath.mpf(0), derivs=(mpmath.mpf(1),) * 7)
        coeffs = revert_series(bundle, 8)
        for k, c in enumerate(coeffs.c, start=1):
            assert abs(c - mpmath.mpf((-1) ** (k + 1)) / k) < mpmath.mpf(10) ** -55


def test_zero_slope_is_rejected_as_multiple_root():
    with pytest.raises(MultipleRootError, match="multiple root"):
        DerivativeBundle(root=1.0, derivs=(0.0, 1.0))


def test_non_finite_bundle_rejected():
    with pytest.raises(JetError):
        DerivativeBundle(root=0.0, derivs=(1.0, math.inf))


def test_insufficient_derivatives():
    with pytest.raises(InsufficientDerivativesError):
        revert_series(DerivativeBundle(root=0.0, derivs=(1.0,)), 3)


@pytest.mark.parametrize("order", [1, 9])
def test_orders_outside_supported_range(order):
    with pytest.raises(UnsupportedOrderError):
        revert_series(DerivativeBundle(root=0.0, derivs=(1.0,) * 10), order)


def test_first_coefficient_is_reciprocal_slope():
    coeffs = revert_series(DerivativeBundle(root=2.0, derivs=(-4.0, 3.0, 1.0, 5.0)), 5)
    assert coeffs.c[0] == pytest.approx(-0.25)


def test_method_coefficients_length_invariant():
    with pytest.raises(ValueError):
        MethodCoefficients(order=4, c=(1.0, 2.0))


# ── closed forms ──────────────────────────────────────────────


def test_closed_form_examples():
    assert closed_form_coefficients(DerivativeBundle(root=0.0, derivs=(4.0,)), 2).c == (0.25,)
    assert closed_form_coefficients(DerivativeBundle(root=0.0, derivs=(1.0, 2.0)), 3).c == pytest.approx([1.0, -1.0])
    assert closed_form_coefficients(DerivativeBundle(root=0.0, derivs=(1.0, 0.0, -2.0)), 4).c == pytest.approx(
        [1.0, 0.0, 1.0 / 3.0]
    )


@pytest.mark.parametrize("order", [1, 5])
def test_closed_form_only_for_orders_two_to_four(order):
    with pytest.raises(UnsupportedOrderError):
        closed_form_coefficients(DerivativeBundle(root=0.0, derivs=(1.0,) * 5), order)


def _random_bundles(count, seed=20240611):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        slope = rng.uniform(0.1, 10.0) * rng.choice([-1.0, 1.0])
        second, third = rng.uniform(-10.0, 10.0, size=2)
        yield DerivativeBundle(root=0.0, derivs=(float(slope), float(second), float(third)))


def _scale(bundle):
    g1, g2, g3 = bundle.derivs
    return max(1 / abs(g1), abs(g2) / abs(g1) ** 3, (3 * g2 * g2 + abs(g1 * g3)) / abs(g1) ** 5)


@pytest.mark.parametrize("method", BOTH)
def test_reversion_agrees_with_closed_forms_on_random_bundles(method):
    for bundle in _random_bundles(1000):
        tol = 1e-12 * _scale(bundle)
        for order in (2, 3, 4):
            reverted = revert_series(bundle, order, method).c
            closed = closed_form_coefficients(bundle, order).c
            assert reverted == pytest.approx(closed, rel=1e-12, abs=tol)


# ── f-space ───────────────────────────────────────────────────


def test_fspace_examples():
    assert fspace_correction(DerivativeBundle(root=0.0, derivs=(-0.5,))).alpha == pytest.approx(1.0)
    assert fspace_correction(DerivativeBundle(root=0.0, derivs=(-1.0,))).alpha == 0

    corr = fspace_correction(DerivativeBundle(root=0.0, derivs=(1.0, 0.0, -2.0)))
    assert corr.alpha == pytest.approx(-2.0)
    assert corr.beta == 0
    assert corr.gamma == pytest.approx(-1.0 / 3.0)


def test_fspace_omits_terms_without_derivatives():
    corr = fspace_correction(DerivativeBundle(root=0.0, derivs=(3.0,)))
    assert corr.beta is None and corr.gamma is None
    assert corr.terms() == [corr.alpha]


def test_fspace_and_gspace_updates_agree():
    rng = np.random.default_rng(7)
    for bundle in _random_bundles(300, seed=11):
        corr = fspace_correction(bundle)
        coeffs = closed_form_coefficients(bundle, 4)
        u = float(rng.uniform(-2, 2))
        gu = float(rng.uniform(-0.5, 0.5))
        gspace = proposed_step(u, gu, coeffs)
        fspace = fspace_step(u, gu, corr)
        scale = abs(u) + abs(gu) * (1 + abs(corr.alpha)) + abs(corr.beta * gu**2) + abs(corr.gamma * gu**3)
        assert fspace == pytest.approx(gspace, rel=1e-12, abs=1e-12 * scale)


# ── order of contact ──────────────────────────────────────────


def _contact_slope(problem, order):
    steps = [mpmath.mpf("1e-2"), mpmath.mpf("1e-3"), mpmath.mpf("1e-4")]
    with mpmath.workdps(80):
        bundle = bundle_at_root(problem, order - 1, backend=MPMATH)
        coeffs = revert_series(bundle, order)
        g = compile_scalar(problem.expression, MPMATH)
        root = mpmath.mpf(problem.root)
        out = [abs(proposed_step(root + e, g(root + e), coeffs) - root) for e in steps]
    return fit_contact_order([float(e) for e in steps], [float(v) for v in out])


@pytest.mark.parametrize("order", [2, 3, 4, 5, 6])
def test_order_of_contact_on_expm1(expm1_problem, order):
    assert _contact_slope(expm1_problem, order) == pytest.approx(order, abs=0.2)


@pytest.mark.parametrize("order", [2, 3, 4])
def test_order_of_contact_on_cubic(order):
    cubic = make_problem("x^3 - 2*x + 1", root=1.0)
    assert _contact_slope(cubic, order) == pytest.approx(order, abs=0.2)
