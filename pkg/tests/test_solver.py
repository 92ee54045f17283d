"""Step functions and the iteration driver."""

import math

import pytest

from app.adapters.expression_evaluator import ExpressionEvaluator  # type: ignore
from app.domain.enums import IterationStatus, MethodName  # type: ignore
from app.domain.errors import NumericalFailure  # type: ignore
from app.domain.models import IterationConfig, MethodKind  # type: ignore
from app.domain.series import MethodCoefficients  # type: ignore
from app.expr.problem import make_problem  # type: ignore
from app.methods import baselines  # type: ignore
from app.methods.proposed import proposed_step  # type: ignore

BASELINES = [m for m in MethodName if m != MethodName.PROPOSED]


# ── proposed_step ─────────────────────────────────────────────


def test_order_two_step_on_atan():
    x = -0.9
    assert proposed_step(x, math.atan(x), MethodCoefficients(2, (1.0,))) == pytest.approx(-0.16718, abs=1e-5)


def test_exact_on_linear_functions():
    coeffs = MethodCoefficients(2, (1.0 / 3.0,))
    for x in (-4.0, 0.0, 5.0, 123.0):
        assert proposed_step(x, 3 * x - 6, coeffs) == pytest.approx(2.0, abs=1e-12)


def test_order_four_far_from_root():
    x = -1e6
    g = math.atan(x)
    result = proposed_step(x, g, MethodCoefficients(4, (1.0, 0.0, 1.0 / 3.0)))
    assert result == pytest.approx(-999997.1373, abs=1e-3)
    assert result == pytest.approx(x - g - g**3 / 3, rel=1e-15)


def test_non_finite_update_is_a_numerical_failure():
    with pytest.raises(NumericalFailure):
        proposed_step(0.0, 1e200, MethodCoefficients(3, (1.0, 1.0)))


# ── baselines ─────────────────────────────────────────────────


def _evaluator(text):
    return ExpressionEvaluator(make_problem(text))


def test_newton_on_quadratic():
    ev = _evaluator("x^2-4")
    assert baselines.newton_step(3.0, 5.0, ev) == pytest.approx(13.0 / 6.0)
    assert ev.derivative_evals == 1
    assert ev.g_evals == 0


def test_newton_on_atan_overshoots_past_threshold():
    ev = _evaluator("atan(x)")
    x1 = baselines.newton_step(1.5, math.atan(1.5), ev)
    assert x1 == pytest.approx(1.5 - math.atan(1.5) * (1 + 1.5**2))
    assert x1 == pytest.approx(-1.694, abs=1e-3)
    assert abs(x1) > 1.5


@pytest.mark.parametrize("name", BASELINES)
def test_every_baseline_exact_on_linear(name, solver):
    step = solver_step(name)
    assert step(0.0, -7.0, _evaluator("x-7")) == pytest.approx(7.0, abs=1e-12)


def solver_step(name):
    from app.services.solver_service import step_function  # type: ignore

    return step_function(MethodKind.baseline(name))


def test_evaluation_counts_per_step():
    cases = {
        MethodName.HALLEY: (0, 2),
        MethodName.CHEBYSHEV: (0, 2),
        MethodName.TWO_STEP_NEWTON: (1, 1),
        MethodName.KUNG_TRAUB_DF4: (2, 0),
        MethodName.DF8: (3, 0),
    }
    for name, (g_evals, derivative_evals) in cases.items():
        ev = _evaluator("exp(x)-2")
        solver_step(name)(1.0, math.e - 2, ev)
        assert (ev.g_evals, ev.derivative_evals) == (g_evals, derivative_evals), name


def test_zero_derivative_is_a_numerical_failure():
    with pytest.raises(NumericalFailure):
        baselines.newton_step(0.0, -1.0, _evaluator("x^2-1"))


def test_df4_and_df8_converge_fast_on_smooth_problem():
    for name in (MethodName.KUNG_TRAUB_DF4, MethodName.DF8):
        step = solver_step(name)
        ev = _evaluator("exp(x)-2")
        x, steps = 1.0, 0
        while abs(math.exp(x) - 2) >= 1e-12 and steps < 10:
            x = step(x, math.exp(x) - 2, ev)
            steps += 1
        assert x == pytest.approx(math.log(2), abs=1e-12)
        assert steps <= 4


@pytest.mark.parametrize("name", ["df4", "df8"])
def test_derivative_free_methods_settle_at_a_root_within_round_off(solver, sqrt_problem, name):
    report = solver.iterate(sqrt_problem, MethodKind.baseline(name), -1e-6)
    assert report.status == IterationStatus.CONVERGED, report.detail
    assert abs(report.x_final) == pytest.approx(16.0, abs=1e-12)


def test_df4_step_at_round_off_level_stays_put():
    # one ulp off the mirror root: g(x) and g(x + g(x)) round to the same value
    x = -15.999999999999998
    ev = _evaluator("sqrt(abs(x))-4")
    gx = ev.value(x)
    assert baselines.df4_step(x, gx, ev) == x


def test_df4_flat_far_from_root_is_a_failure():
    ev = _evaluator("x^0")
    with pytest.raises(NumericalFailure, match="Steffensen"):
        baselines.df4_step(2.0, 1.0, ev)


def test_chebyshev_rejects_negligible_derivative():
    with pytest.raises(NumericalFailure, match="near-zero"):
        baselines.chebyshev_step(1e-17, -1.0, _evaluator("x^2-1"))


def test_halley_rejects_cancelling_denominator():
    x = 1 / math.sqrt(3)
    with pytest.raises(NumericalFailure, match="Halley"):
        baselines.halley_step(x, x * x + 1, _evaluator("x^2+1"))


# ── iterate ───────────────────────────────────────────────────


def test_atan_order_two_from_near_start(solver, methods, atan_problem):
    report = solver.iterate(atan_problem, methods.proposed(atan_problem, 2), -0.9)
    assert report.status == IterationStatus.CONVERGED
    assert 4 <= report.steps <= 6
    assert abs(report.x_final) < 1e-12
    assert report.method == "Second order"


def test_newton_on_atan_far_start_diverges(solver, atan_problem):
    report = solver.iterate(atan_problem, MethodKind.baseline("newton"), -1e6)
    assert report.status == IterationStatus.DIVERGED
    assert report.steps == 0
    assert report.x_final == -1e6
    assert "step 1" in report.detail


def test_newton_on_linear_converges_in_one_step(solver):
    report = solver.iterate(make_problem("x-7"), MethodKind.baseline("newton"), 0.0)
    assert report.status == IterationStatus.CONVERGED
    assert report.steps == 1
    assert report.x_final == 7.0
    assert report.residual == 0.0


@pytest.mark.parametrize("token", ["order2", "order3", "order5", "order8", *[m.value for m in BASELINES]])
def test_identity_converges_in_at_most_one_step(solver, methods, token):
    problem = make_problem("x", root=0.0)
    for x0 in (-3.7, 0.25, 41.0):
        report = solver.iterate(problem, methods.resolve(problem, token), x0)
        assert report.status == IterationStatus.CONVERGED
        assert report.steps <= 1


@pytest.mark.parametrize("order", [2, 3, 4, 6])
def test_proposed_uses_one_evaluation_per_step(solver, methods, atan_problem, order):
    report = solver.iterate(atan_problem, methods.proposed(atan_problem, order), -0.9)
    assert report.g_evals == report.steps + 1
    # root derivatives g'(l) .. g^(n-1)(l), charged once for the whole solve
    assert report.derivative_evals == order - 1


def test_root_derivatives_are_charged_once_not_per_step(solver, methods, atan_problem):
    method = methods.proposed(atan_problem, 3)
    short = solver.iterate(atan_problem, method, -0.1)
    long = solver.iterate(atan_problem, method, -50.0)
    assert long.steps > short.steps
    assert short.derivative_evals == long.derivative_evals == 2


def test_explicit_derivatives_cost_no_differentiation(solver, methods):
    problem = make_problem("atan(x)", root=0.0, derivatives=[1.0, 0.0, -2.0])
    report = solver.iterate(problem, methods.proposed(problem, 4), -0.9)
    assert report.converged
    assert report.derivative_evals == 0


@pytest.mark.parametrize("name", ["newton", "halley", "chebyshev"])
def test_derivative_baselines_use_at_least_two_evaluations_per_step(solver, atan_problem, name):
    report = solver.iterate(atan_problem, MethodKind.baseline(name), -0.9)
    assert report.steps > 0
    per_step = (report.g_evals - 1 + report.derivative_evals) / report.steps
    assert per_step >= 2


@pytest.mark.parametrize("order", [2, 3, 4])
def test_translation_equivariance(solver, methods, order):
    base = make_problem("exp(x)-1", root=0.0)
    shifted = make_problem("exp(x-3)-1", root=3.0)
    a = solver.iterate(base, methods.proposed(base, order), 0.5)
    b = solver.iterate(shifted, methods.proposed(shifted, order), 3.5)
    assert a.converged and b.converged
    assert b.x_final == pytest.approx(a.x_final + 3.0, abs=1e-12)


def test_newton_basin_bracket_on_atan(solver, atan_problem):
    newton = MethodKind.baseline("newton")
    assert solver.iterate(atan_problem, newton, 1.3).status == IterationStatus.CONVERGED
    assert solver.iterate(atan_problem, newton, -1.3).status == IterationStatus.CONVERGED
    assert solver.iterate(atan_problem, newton, 1.5).status == IterationStatus.DIVERGED
    assert solver.iterate(atan_problem, newton, -1.5).status == IterationStatus.DIVERGED


def test_max_steps_reported(solver, methods, atan_problem):
    config = IterationConfig(max_steps=3)
    report = solver.iterate(atan_problem, methods.proposed(atan_problem, 2), -100.0, config)
    assert report.status == IterationStatus.MAX_STEPS
    assert report.steps == 3
    assert report.g_evals == 4


def test_domain_error_at_iterate_is_a_numerical_failure(solver):
    problem = make_problem("ln(x)", root=1.0)
    report = solver.iterate(problem, MethodKind.baseline("newton"), 3.0)
    assert report.status == IterationStatus.NUMERICAL_FAILURE
    assert report.failure_step == 1
    assert report.steps == 0


def test_starting_at_the_root(solver, methods, atan_problem):
    report = solver.iterate(atan_problem, methods.proposed(atan_problem, 3), 0.0)
    assert report.status == IterationStatus.CONVERGED
    assert report.steps == 0


def test_trace_is_bounded_and_coc_reported(solver, methods, expm1_problem):
    config = IterationConfig(trace_limit=3)
    report = solver.iterate(expm1_problem, methods.proposed(expm1_problem, 2), 0.5, config)
    assert len(report.trace) <= 3

    full = solver.iterate(expm1_problem, methods.proposed(expm1_problem, 2), 0.5)
    assert full.trace[0] == 0.5
    assert full.coc is not None
