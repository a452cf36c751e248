from __future__ import annotations

import numpy as np
import pytest

from analytic.branch_cut import (
    BranchCutDensity,
    alpha_analytic,
    branch_cut_density,
    branch_cut_integral,
    pe_longtime,
)
from analytic.poles import solve_bound_states
from system.dynamics import evolve
from system.model import ModelParams
from utils.errors import ParameterError, QuadratureConvergenceError


def test_density_vanishes_outside_and_on_edges(ring_params):
    density = branch_cut_density(ring_params, np.array([-3.0, -2.0, 2.0, 2.5]))

    np.testing.assert_array_equal(density, 0.0)


def test_density_is_non_negative(ring_params):
    x = np.linspace(-2.0, 2.0, 2001)
    assert np.all(branch_cut_density(ring_params, x) >= 0)
    assert BranchCutDensity(ring_params).support == (-2.0, 2.0)


def test_integral_is_zero_without_coupling():
    params = ModelParams.from_qubits(8, 11.0, 10.0, 0.0)

    np.testing.assert_array_equal(branch_cut_integral(params, [0.0, 3.0]), 0.0)


def test_sum_rule_at_zero(ring_params, ring_solution):
    value = branch_cut_integral(ring_params, 0.0)[0]

    assert value.real == pytest.approx(1 - ring_solution.a1 - ring_solution.a2, abs=1e-6)
    assert abs(value.imag) < 1e-9


def test_sum_rule_over_random_in_band_parameters():
    rng = np.random.default_rng(11)

    for _ in range(100):
        params = ModelParams.from_qubits(
            8,
            omega_atom=10.0 + rng.uniform(-1.99, 1.99),
            omega_cavity=10.0,
            coupling=1.0 - rng.uniform(0.0, 1.0),
        )
        s = solve_bound_states(params)
        cut = branch_cut_integral(params, 0.0)[0].real

        assert s.a1 + s.a2 + cut == pytest.approx(1.0, abs=1e-6)


def test_sum_rule_for_narrow_resonance():
    params = ModelParams.from_qubits(8, 11.2634, 10.0, 0.0027)
    s = solve_bound_states(params)
    cut = branch_cut_integral(params, 0.0)[0]

    assert s.a1 + s.a2 + cut.real == pytest.approx(1.0, abs=1e-6)
    assert abs(cut.imag) < 1e-9


def test_sum_rule_by_direct_density_integration(ring_params, ring_solution):
    from scipy import integrate

    x = np.linspace(-2.0, 2.0, 400001)
    total = integrate.trapezoid(branch_cut_density(ring_params, x), x)

    assert total == pytest.approx(1 - ring_solution.a1 - ring_solution.a2, abs=1e-4)


def test_branch_cut_decays(ring_params):
    values = np.abs(branch_cut_integral(ring_params, [0.0, 200.0]))

    assert values[1] < 0.05 * values[0]


def test_alpha_analytic_starts_at_one(ring_params):
    alpha = alpha_analytic(ring_params, 0.0)

    assert alpha[0] == pytest.approx(1.0, abs=1e-6)


def test_alpha_analytic_without_coupling():
    params = ModelParams.from_qubits(8, 11.0, 10.0, 0.0)
    t = np.linspace(0.0, 10.0, 11)

    np.testing.assert_allclose(np.abs(alpha_analytic(params, t)) ** 2, 1.0)


def test_negative_time_is_rejected(ring_params):
    with pytest.raises(ParameterError):
        branch_cut_integral(ring_params, [-1.0])


def test_quadrature_failure_is_reported(ring_params):
    with pytest.raises(QuadratureConvergenceError):
        branch_cut_integral(ring_params, [500.0], tol=1e-15, start_order=4, max_order=16)


def test_longtime_law_bounds_and_period_mean(ring_params, ring_solution):
    s = ring_solution
    t = np.linspace(0.0, s.period, 4001)
    pe = pe_longtime(ring_params, t, s)

    from scipy import integrate

    assert pe.max() == pytest.approx((s.a1 + s.a2) ** 2, rel=1e-6)
    assert pe.min() == pytest.approx((s.a1 - s.a2) ** 2, rel=1e-6)
    assert integrate.trapezoid(pe, t) / s.period == pytest.approx(s.mean, rel=1e-6)


@pytest.mark.slow
def test_large_ring_matches_infinite_lattice(ring_params, ring_solution):
    params = ring_params.with_qubits(10)
    t = np.linspace(0.0, 250.0, 501)

    exact = evolve(params, t).values
    analytic = np.abs(alpha_analytic(params, t, ring_solution)) ** 2

    np.testing.assert_allclose(exact, analytic, atol=1e-2)
