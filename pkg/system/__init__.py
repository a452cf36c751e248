"""
Physical System Package
Модель атома в кольце связанных резонаторов и её точная динамика
"""

from .model import (
    ModelParams,
    BasisMap,
    validate,
    dispersion,
    band_edges,
    k_coupling,
    ring_wavenumbers,
    basis_map
)

from .dynamics import (
    SpectralDecomposition,
    TimeSeries,
    SingleExcitationState,
    build_hamiltonian,
    build_k_hamiltonian,
    diagonalize,
    decompose,
    atom_amplitude,
    evolve,
    state_at,
    photon_density,
    population_derivative
)

__all__ = [
    # Model
    'ModelParams',
    'BasisMap',
    'validate',
    'dispersion',
    'band_edges',
    'k_coupling',
    'ring_wavenumbers',
    'basis_map',

    # Dynamics
    'SpectralDecomposition',
    'TimeSeries',
    'SingleExcitationState',
    'build_hamiltonian',
    'build_k_hamiltonian',
    'diagonalize',
    'decompose',
    'atom_amplitude',
    'evolve',
    'state_at',
    'photon_density',
    'population_derivative',
]
