from __future__ import annotations

import numpy as np
import pytest

from metrology.scaling import optimal_times, scaling_fit
from metrology.uncertainty import UncertaintyCurve, UncertaintySource, uncertainty_curve
from system.model import ModelParams
from utils.errors import InsufficientDataError, ParameterError
from utils.validators import uniform_grid


def _curve(times, values) -> UncertaintyCurve:
    return UncertaintyCurve(
        times=np.asarray(times, dtype=float),
        delta_omega=np.asarray(values, dtype=float),
        t_total=None,
        source=UncertaintySource.NUMERIC,
        per_shot=True,
    )


def test_block_minima_are_anchored_at_window_start():
    times = np.arange(10.0, 20.0, 0.1)
    curve = _curve(times, 2.0 + np.cos(2 * np.pi * times))
    optimal = optimal_times(curve, block=1.0, start=10.0)

    assert len(optimal) == 10
    np.testing.assert_allclose(optimal.times, np.arange(10.5, 20.0, 1.0), atol=1e-9)


def test_local_minima_without_block():
    times = np.arange(0.0, 10.0, 0.1)
    optimal = optimal_times(_curve(times, 2.0 + np.cos(2 * np.pi * times)))

    np.testing.assert_allclose(optimal.times, np.arange(0.5, 10.0, 1.0), atol=1e-9)


def test_bad_block():
    with pytest.raises(ParameterError):
        optimal_times(_curve([1.0, 2.0], [1.0, 2.0]), block=0.0)


def test_exact_power_law():
    times = np.linspace(1.0, 100.0, 1000)
    curve = _curve(times, 3.0 * times ** -0.75 * (1.5 + np.cos(times)))
    fit = scaling_fit(curve, block=2 * np.pi, window=(10.0, 100.0))

    assert fit.slope == pytest.approx(0.75, abs=0.01)
    assert fit.r > 0.999
    assert fit.window == (10.0, 100.0)


def test_too_few_points():
    times = np.linspace(1.0, 10.0, 100)
    with pytest.raises(InsufficientDataError):
        scaling_fit(_curve(times, 1.0 / times), block=5.0)


def test_empty_curve():
    with pytest.raises(InsufficientDataError):
        scaling_fit(_curve([], []))


def _longtime(ring_params, ring_solution, per_shot: bool) -> UncertaintyCurve:
    grid = uniform_grid(1000.0, 10000.0, 0.05)
    total = None if per_shot else float(grid[-1])
    return uncertainty_curve(
        ring_params, grid, total, 'longtime_exact', per_shot=per_shot, solution=ring_solution
    )


def test_longtime_per_shot_recovers_inverse_time(ring_params, ring_solution):
    curve = _longtime(ring_params, ring_solution, per_shot=True)
    fit = scaling_fit(curve, window=(1000.0, 10000.0), block=ring_solution.period)

    assert fit.slope == pytest.approx(1.0, abs=0.05)
    assert fit.r >= 0.99


def test_longtime_fixed_budget_gives_square_root(ring_params, ring_solution):
    curve = _longtime(ring_params, ring_solution, per_shot=False)
    fit = scaling_fit(curve, window=(1000.0, 10000.0), block=ring_solution.period)

    assert fit.slope == pytest.approx(0.5, abs=0.05)
    assert fit.r >= 0.99


def test_off_resonant_atom_saturates():
    params = ModelParams.from_qubits(8, 17.0, 10.0, 0.3)
    curve = uncertainty_curve(params, uniform_grid(0.02, 120.0, 0.02), 120.0, 'numeric')
    fit = scaling_fit(curve, window=(60.0, 120.0), block=5.0)

    assert abs(fit.slope) < 0.2
