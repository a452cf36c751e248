from __future__ import annotations

import math

import numpy as np
import pytest

from system.model import (
    ModelParams,
    band_edges,
    basis_map,
    dispersion,
    k_coupling,
    ring_wavenumbers,
    validate,
)
from utils.errors import ParameterError


def _params(**overrides) -> ModelParams:
    values = dict(omega_atom=11.0, omega_cavity=10.0, coupling=1.3, cavities=7, hopping=1.0)
    values.update(overrides)
    return ModelParams(**values)


def test_from_qubits_sets_ring_size():
    params = ModelParams.from_qubits(3, 11.0, 10.0, 1.3)

    assert params.cavities == 7
    assert params.j_max == 3
    assert params.qubits == 3
    assert params.dimension == 8
    assert params.detuning == pytest.approx(1.0)


def test_qubits_is_none_for_arbitrary_odd_ring():
    assert _params(cavities=9).qubits is None


@pytest.mark.parametrize(
    "overrides, message",
    [
        ({"cavities": 8}, "n must be odd"),
        ({"cavities": 0}, "n must be positive"),
        ({"hopping": 0.0}, "hopping must be positive"),
        ({"coupling": -1.0}, "coupling must be non-negative"),
        ({"omega_atom": float("nan")}, "omega_atom must be finite"),
        ({"omega_cavity": float("inf")}, "omega_cavity must be finite"),
    ],
)
def test_validate_names_violated_invariant(overrides, message):
    with pytest.raises(ParameterError, match=message):
        validate(_params(**overrides))


def test_validate_accepts_zero_coupling_and_single_cavity():
    params = _params(coupling=0.0, cavities=1)
    assert validate(params) is params


def test_band_edges():
    assert band_edges(_params()) == (8.0, 12.0)
    assert band_edges(_params(omega_cavity=20.0, hopping=0.5)) == (19.0, 21.0)


def test_dispersion_is_even_and_fills_the_band():
    params = _params()
    k = np.linspace(-np.pi, np.pi, 1001)
    omega = dispersion(params, k)

    np.testing.assert_allclose(omega, omega[::-1], atol=1e-12)
    lower, upper = band_edges(params)
    assert omega.min() == pytest.approx(lower)
    assert omega.max() == pytest.approx(upper)


def test_k_coupling():
    assert k_coupling(_params(cavities=1)) == pytest.approx(1.3)
    assert k_coupling(_params(coupling=3.0, cavities=9)) == pytest.approx(1.0)


def test_ring_wavenumbers_lie_in_brillouin_zone():
    k = ring_wavenumbers(_params(cavities=15))

    assert len(k) == 15
    assert np.all(k > -np.pi) and np.all(k <= np.pi)
    assert k[0] == 0.0
    np.testing.assert_allclose(np.sort(np.abs(k[1:])), np.repeat(2 * np.pi * np.arange(1, 8) / 15, 2))


def test_with_qubits_keeps_frequencies():
    params = ModelParams.from_qubits(8, 11.0, 10.0, 1.3).with_qubits(5)

    assert params.cavities == 31
    assert params.omega_atom == 11.0
    assert params.coupling == 1.3


def test_to_dict_uses_record_keys():
    record = ModelParams.from_qubits(2, 11.0, 10.0, 1.3).to_dict()

    assert record == {
        "omega_atom": 11.0,
        "omega_cavity": 10.0,
        "xi": 1.0,
        "coupling_j": 1.3,
        "cavities": 3,
        "qubits": 2,
    }


def test_basis_map_two_qubits():
    basis = basis_map(2)

    assert basis.size == 4
    assert basis.position(0) is None
    assert [basis.position(i) for i in range(1, 4)] == [-1, 0, 1]
    assert basis.label(0) == "atom"
    assert basis.label(2) == "cavity[0]"
    assert basis.bitstring(0) == "00"
    assert basis.bitstring(3) == "11"


@pytest.mark.parametrize("qubits", [1, 3, 5])
def test_basis_map_is_a_bijection(qubits):
    basis = basis_map(qubits)

    for index in range(basis.size):
        assert basis.index_of(basis.position(index)) == index
    positions = [basis.position(i) for i in range(1, basis.size)]
    assert positions == list(range(-basis.j_max, basis.j_max + 1))


def test_basis_map_center_matches_coupled_cavity():
    basis = basis_map(4)
    params = ModelParams.from_qubits(4, 11.0, 10.0, 1.3)

    assert basis.index_of(0) == 1 + params.j_max


@pytest.mark.parametrize("qubits", [0, -1, 2.5])
def test_basis_map_rejects_bad_qubit_count(qubits):
    with pytest.raises(ParameterError):
        basis_map(qubits)


def test_basis_map_rejects_out_of_range():
    basis = basis_map(2)

    with pytest.raises(ParameterError):
        basis.position(4)
    with pytest.raises(ParameterError):
        basis.index_of(2)


def test_from_qubits_rejects_zero():
    with pytest.raises(ParameterError):
        ModelParams.from_qubits(0, 11.0, 10.0, 1.3)


def test_k_coupling_scales_with_ring():
    small = ModelParams.from_qubits(3, 11.0, 10.0, 1.3)
    large = small.with_qubits(7)

    assert k_coupling(small) / k_coupling(large) == pytest.approx(math.sqrt(127 / 7))
