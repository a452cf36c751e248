from __future__ import annotations

import numpy as np
import pytest

from metrology.scaling import optimal_times
from metrology.uncertainty import uncertainty_curve
from system.model import ModelParams
from utils.validators import uniform_grid


def test_resonant_weak_coupling_carries_no_information():
    params = ModelParams.from_qubits(8, 20.0, 20.0, 0.3)
    grid = uniform_grid(0.5, 90.0, 0.5)

    curve = uncertainty_curve(params, grid, 90.0, 'numeric')

    assert len(curve) == 0
    assert curve.skipped == len(grid)


def test_strong_coupling_numeric_curve_exists_where_first_order_fails():
    params = ModelParams.from_qubits(8, 20.5, 20.0, 3.0)
    grid = uniform_grid(0.5, 120.0, 0.5)

    numeric = uncertainty_curve(params, grid, 120.0, 'numeric')
    first_order = uncertainty_curve(params, grid, 120.0, 'perturbative')

    assert len(numeric) > len(grid) // 2
    assert np.all(np.isfinite(numeric.delta_omega))
    assert len(first_order) == 0

    def floor(lo: float, hi: float) -> float:
        mask = (numeric.times > lo) & (numeric.times <= hi)
        return float(numeric.delta_omega[mask].min())

    assert floor(0.0, 2.0) < floor(2.0, 5.0)

    edges = [10.0, 20.0, 40.0, 60.0, 80.0, 100.0, 120.0]
    minima = [floor(lo, hi) for lo, hi in zip(edges[:-1], edges[1:])]
    assert np.all(np.diff(minima) < 0)


@pytest.mark.slow
def test_numeric_matches_longtime_law_at_optimal_times(ring_params, ring_solution):
    params = ring_params.with_qubits(10)
    grid = uniform_grid(100.0, 250.0, 0.02)

    longtime = uncertainty_curve(params, grid, 250.0, 'longtime_exact', solution=ring_solution)
    numeric = uncertainty_curve(params, grid, 250.0, 'numeric')
    optimal = optimal_times(longtime, block=ring_solution.period, start=100.0)

    picked = np.isin(numeric.times, optimal.times)
    assert picked.sum() == len(optimal)
    np.testing.assert_allclose(numeric.delta_omega[picked], optimal.delta_omega, rtol=0.05)
