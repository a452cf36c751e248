from __future__ import annotations

import numpy as np
import pytest

from system.dynamics import (
    TimeSeries,
    atom_amplitude,
    build_hamiltonian,
    build_k_hamiltonian,
    decompose,
    diagonalize,
    evolve,
    photon_density,
    population_derivative,
    state_at,
)
from system.model import ModelParams
from utils.errors import DiagonalizationError, ParameterError


def _two_level(omega_atom: float = 11.0, coupling: float = 1.3) -> ModelParams:
    return ModelParams(omega_atom=omega_atom, omega_cavity=10.0, coupling=coupling, cavities=1)


def _rabi(params: ModelParams, t):
    delta = params.detuning
    rate = np.sqrt(delta ** 2 + 4 * params.coupling ** 2)
    return 1 - (4 * params.coupling ** 2 / rate ** 2) * np.sin(rate * t / 2) ** 2


def _rabi_derivative(params: ModelParams, t):
    delta = params.detuning
    J2 = params.coupling ** 2
    rate = np.sqrt(delta ** 2 + 4 * J2)
    return (
        8 * J2 * delta / rate ** 4 * np.sin(rate * t / 2) ** 2
        - 2 * J2 * delta * t / rate ** 3 * np.sin(rate * t)
    )


def test_hamiltonian_single_cavity():
    H = build_hamiltonian(_two_level())

    np.testing.assert_array_equal(H, [[11.0, 1.3], [1.3, 10.0]])


def test_hamiltonian_three_cavity_ring():
    params = ModelParams(omega_atom=11.0, omega_cavity=10.0, coupling=1.3, cavities=3)
    H = build_hamiltonian(params)

    np.testing.assert_array_equal(H, H.T)
    assert H[0, 2] == 1.3
    assert H[0, 1] == 0.0 and H[0, 3] == 0.0
    assert H[1, 2] == -1.0 and H[2, 3] == -1.0
    assert H[1, 3] == -1.0
    np.testing.assert_array_equal(np.diag(H), [11.0, 10.0, 10.0, 10.0])


@pytest.mark.parametrize("cavities", [7, 15, 63])
def test_momentum_basis_has_same_spectrum(cavities):
    params = ModelParams(omega_atom=11.0, omega_cavity=10.0, coupling=1.3, cavities=cavities)

    real = np.linalg.eigvalsh(build_hamiltonian(params))
    momentum = np.linalg.eigvalsh(build_k_hamiltonian(params))

    np.testing.assert_allclose(real, momentum, atol=1e-9)


def test_atom_overlaps_sum_to_one():
    decomposition = decompose(ModelParams.from_qubits(5, 11.0, 10.0, 1.3))

    assert decomposition.atom_overlaps.sum() == pytest.approx(1.0, abs=1e-12)
    assert np.all(np.diff(decomposition.eigenvalues) >= 0)


def test_single_cavity_matches_rabi_formula():
    params = _two_level()
    times = np.sort(np.random.default_rng(7).uniform(0.0, 50.0, 100))

    series = evolve(params, times)

    np.testing.assert_allclose(series.values, _rabi(params, times), atol=1e-8)
    assert series.params is params


def test_zero_coupling_keeps_atom_excited():
    params = ModelParams.from_qubits(4, 11.0, 10.0, 0.0)
    series = evolve(params, np.linspace(0.0, 20.0, 201))

    np.testing.assert_allclose(series.values, 1.0, atol=1e-12)


def test_norm_is_conserved():
    params = ModelParams.from_qubits(5, 11.0, 10.0, 1.3)
    decomposition = decompose(params)

    for t in (0.0, 0.7, 13.0, 250.0):
        assert state_at(params, t, decomposition).norm == pytest.approx(1.0, abs=1e-10)


def test_state_at_zero_is_atom():
    params = ModelParams.from_qubits(3, 11.0, 10.0, 1.3)
    state = state_at(params, 0.0)

    assert state.alpha == pytest.approx(1.0)
    np.testing.assert_allclose(state.cavity_amplitudes, 0.0, atol=1e-12)


def test_population_is_time_reversal_symmetric():
    params = ModelParams.from_qubits(4, 11.0, 10.0, 1.3)
    decomposition = decompose(params)
    times = np.linspace(0.1, 30.0, 300)

    forward = evolve(params, times, decomposition).values
    backward = np.abs(atom_amplitude(decomposition, -times)) ** 2

    np.testing.assert_allclose(backward, forward, atol=1e-12)


def test_atom_amplitude_chunking_is_transparent():
    decomposition = decompose(ModelParams.from_qubits(4, 11.0, 10.0, 1.3))
    times = np.linspace(0.0, 40.0, 1001)

    np.testing.assert_allclose(
        atom_amplitude(decomposition, times, chunk=7),
        atom_amplitude(decomposition, times, chunk=5000),
        atol=1e-13,
    )


def test_photon_density_is_mirror_symmetric():
    params = ModelParams.from_qubits(5, 11.0, 10.0, 1.3)
    state = state_at(params, 6.5)
    density = photon_density(state)

    assert len(density) == params.cavities
    np.testing.assert_allclose(density, density[::-1], atol=1e-12)
    assert density.sum() + abs(state.alpha) ** 2 == pytest.approx(1.0, abs=1e-10)


def test_evolve_rejects_bad_grid():
    params = _two_level()

    with pytest.raises(ParameterError):
        evolve(params, [0.0, 2.0, 1.0])
    with pytest.raises(ParameterError):
        evolve(params, [-1.0, 0.0])


def test_diagonalize_rejects_non_hermitian():
    with pytest.raises(DiagonalizationError):
        diagonalize(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(DiagonalizationError):
        diagonalize(np.ones((2, 3)))


def test_population_derivative_matches_rabi():
    params = _two_level()
    times = np.linspace(0.5, 20.0, 40)

    derivative = population_derivative(params, times)

    np.testing.assert_allclose(derivative, _rabi_derivative(params, times), atol=1e-6)


def test_population_derivative_without_richardson():
    params = _two_level()
    times = np.linspace(0.5, 20.0, 40)

    derivative = population_derivative(params, times, step=1e-4, richardson=False)

    np.testing.assert_allclose(derivative, _rabi_derivative(params, times), atol=1e-5)


def test_population_derivative_vanishes_at_resonant_single_cavity():
    params = _two_level(omega_atom=10.0)
    derivative = population_derivative(params, np.linspace(0.5, 10.0, 20))

    np.testing.assert_array_equal(derivative, 0.0)


def test_noise_floor_cuts_small_early_derivatives():
    params = _two_level()
    times = np.linspace(0.02, 0.05, 4)

    cut = population_derivative(params, times)
    kept = population_derivative(params, times, noise_floor=0.0)

    np.testing.assert_array_equal(cut, 0.0)
    assert np.all(kept > 0)
    np.testing.assert_allclose(kept, _rabi_derivative(params, times), rtol=1e-2)
    np.testing.assert_allclose(kept, params.coupling ** 2 * params.detuning * times ** 4 / 6, rtol=1e-2)


def test_population_derivative_rejects_bad_step():
    with pytest.raises(ParameterError):
        population_derivative(_two_level(), [1.0], step=0.0)


def test_time_series_restrict_is_inclusive():
    series = TimeSeries(np.arange(10.0), np.arange(10.0) ** 2)
    part = series.restrict(2.0, 5.0)

    np.testing.assert_array_equal(part.times, [2.0, 3.0, 4.0, 5.0])
    assert part.span == 3.0
    assert len(part) == 4


def test_time_series_shape_mismatch():
    with pytest.raises(ValueError):
        TimeSeries(np.arange(3.0), np.arange(4.0))
