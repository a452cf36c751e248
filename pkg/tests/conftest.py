from __future__ import annotations

import pytest

from analytic.poles import solve_bound_states
from config import config
from spectral.window import measure_regular_window
from system.model import ModelParams


@pytest.fixture(autouse=True)
def _no_log_files(monkeypatch):
    monkeypatch.setattr(config, "LOG_TO_FILE", False)


def make_params(
    qubits: int = 8,
    omega_atom: float = 11.0,
    omega_cavity: float = 10.0,
    coupling: float = 1.3,
) -> ModelParams:
    return ModelParams.from_qubits(qubits, omega_atom, omega_cavity, coupling)


@pytest.fixture(scope="session")
def ring_params() -> ModelParams:
    """Ω=11ξ, ω0=10ξ, J=1.3ξ, N=8"""
    return make_params()


@pytest.fixture(scope="session")
def ring_solution(ring_params):
    return solve_bound_states(ring_params)


@pytest.fixture(scope="session")
def weak_params() -> ModelParams:
    """Ω=ω0=20ξ, J=0.3ξ, N=8"""
    return make_params(omega_atom=20.0, omega_cavity=20.0, coupling=0.3)


@pytest.fixture(scope="session")
def ring_window(ring_params, ring_solution):
    """Ряд N=8 и его регулярное окно"""
    return measure_regular_window(ring_params, ring_solution)
