"""
Single-Excitation Dynamics
Файл: system/dynamics.py

Точная эволюция одновозбуждённого сектора (n+1 состояний) через полную
диагонализацию гамильтониана кольца и фазовый поворот собственных мод.
Начальное состояние: α(0) = 1, все резонаторы пусты.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import linalg

from system.model import ModelParams, dispersion, k_coupling, ring_wavenumbers, validate
from utils.errors import DiagonalizationError, ParameterError
from utils.validators import validate_time_grid

logger = logging.getLogger(__name__)


@dataclass
class SpectralDecomposition:
    """
    Спектральное разложение гамильтониана

    Attributes:
        eigenvalues: n+1 собственных частот по возрастанию
        atom_overlaps: |<e|v_m>|^2, сумма равна 1
        eigenvectors: Ортонормированные собственные векторы (столбцы)
    """
    eigenvalues: np.ndarray
    atom_overlaps: np.ndarray
    eigenvectors: np.ndarray


@dataclass
class TimeSeries:
    """
    Населённость возбуждённого состояния атома P_e(t)

    Attributes:
        times: Строго возрастающие моменты (1/ξ)
        values: P_e в этих моментах
        params: Параметры, породившие ряд (если известны)
    """
    times: np.ndarray
    values: np.ndarray
    params: Optional[ModelParams] = None

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.times.shape != self.values.shape:
            raise ValueError("times and values must have equal length")

    def __len__(self) -> int:
        return len(self.times)

    @property
    def span(self) -> float:
        return float(self.times[-1] - self.times[0]) if len(self.times) > 1 else 0.0

    def restrict(self, t_start: float, t_end: float) -> 'TimeSeries':
        """Участок ряда [t_start, t_end] (концы включительно)"""
        mask = (self.times >= t_start) & (self.times <= t_end)
        return TimeSeries(self.times[mask], self.values[mask], self.params)


@dataclass
class SingleExcitationState:
    """
    Вектор состояния в базисе BasisMap

    Attributes:
        amplitudes: Элемент 0 - α(t), элементы 1..n - амплитуды резонаторов β_j(t)
    """
    amplitudes: np.ndarray

    @property
    def alpha(self) -> complex:
        return complex(self.amplitudes[0])

    @property
    def cavity_amplitudes(self) -> np.ndarray:
        return self.amplitudes[1:]

    @property
    def norm(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


def build_hamiltonian(params: ModelParams) -> np.ndarray:
    """
    Гамильтониан одновозбуждённого сектора в координатном базисе

    H[0,0] = Ω, H[j,j] = ω0, -ξ между соседними резонаторами (кольцо,
    включая связь позиций j_M и -j_M при n >= 3), J между атомом и
    резонатором в позиции 0.

    Args:
        params: ModelParams

    Returns:
        Вещественная симметричная матрица (n+1) x (n+1)
    """
    validate(params)

    n = params.cavities
    H = np.zeros((n + 1, n + 1))

    H[0, 0] = params.omega_atom
    cavity = np.arange(1, n + 1)
    H[cavity, cavity] = params.omega_cavity

    if n >= 3:
        left = np.arange(1, n)
        H[left, left + 1] = -params.hopping
        H[left + 1, left] = -params.hopping
        H[1, n] = -params.hopping
        H[n, 1] = -params.hopping

    center = 1 + params.j_max
    H[0, center] = params.coupling
    H[center, 0] = params.coupling

    return H


def build_k_hamiltonian(params: ModelParams) -> np.ndarray:
    """
    Гамильтониан в импульсном базисе: моды ω_k и однородная связь J/√n

    Args:
        params: ModelParams

    Returns:
        Матрица (n+1) x (n+1); для n >= 3 её спектр совпадает с build_hamiltonian
    """
    validate(params)

    n = params.cavities
    H = np.zeros((n + 1, n + 1))

    H[0, 0] = params.omega_atom
    modes = np.arange(1, n + 1)
    H[modes, modes] = dispersion(params, ring_wavenumbers(params))
    H[0, 1:] = k_coupling(params)
    H[1:, 0] = k_coupling(params)

    return H


def diagonalize(H: np.ndarray) -> SpectralDecomposition:
    """
    Диагонализация эрмитовой матрицы

    Args:
        H: Эрмитова матрица

    Returns:
        SpectralDecomposition

    Raises:
        DiagonalizationError: матрица не эрмитова или LAPACK не сошёлся
    """
    H = np.asarray(H)

    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise DiagonalizationError(f"expected a square matrix, got shape {H.shape}")
    if not np.all(np.isfinite(H)):
        raise DiagonalizationError("matrix contains non-finite entries")
    if not np.allclose(H, H.conj().T, rtol=0.0, atol=1e-12):
        raise DiagonalizationError("matrix is not Hermitian")

    try:
        eigenvalues, eigenvectors = linalg.eigh(H)
    except (linalg.LinAlgError, ValueError) as e:
        raise DiagonalizationError(f"eigh failed: {e}") from e

    overlaps = np.abs(eigenvectors[0, :]) ** 2

    logger.debug(
        f"Diagonalized {H.shape[0]}x{H.shape[0]}: "
        f"E in [{eigenvalues[0]:.4f}, {eigenvalues[-1]:.4f}], "
        f"weight sum {overlaps.sum():.12f}"
    )

    return SpectralDecomposition(
        eigenvalues=eigenvalues,
        atom_overlaps=overlaps,
        eigenvectors=eigenvectors,
    )


def decompose(params: ModelParams) -> SpectralDecomposition:
    """Построить и диагонализовать гамильтониан"""
    return diagonalize(build_hamiltonian(params))


def atom_amplitude(
        decomposition: SpectralDecomposition,
        times,
        chunk: Optional[int] = None
) -> np.ndarray:
    """
    α(t) = Σ_m |<e|v_m>|^2 exp(-i E_m t)

    Args:
        decomposition: SpectralDecomposition
        times: Моменты времени (допускаются отрицательные)
        chunk: Моментов за один проход (по умолчанию из config)

    Returns:
        Комплексный массив α той же длины, что times
    """
    from config import config

    if chunk is None:
        chunk = config.EVOLVE_CHUNK

    times = np.atleast_1d(np.asarray(times, dtype=float))
    energies = decomposition.eigenvalues
    weights = decomposition.atom_overlaps.astype(complex)

    alpha = np.empty(times.shape, dtype=complex)
    for start in range(0, len(times), chunk):
        block = times[start:start + chunk]
        alpha[start:start + chunk] = np.exp(-1j * np.outer(block, energies)) @ weights

    return alpha


def evolve(
        params: ModelParams,
        times,
        decomposition: Optional[SpectralDecomposition] = None
) -> TimeSeries:
    """
    Населённость P_e(t) = |α(t)|^2 на сетке

    Args:
        params: ModelParams
        times: Возрастающая сетка, times[0] >= 0
        decomposition: Готовое разложение (иначе строится)

    Returns:
        TimeSeries
    """
    grid = validate_time_grid(times)

    if decomposition is None:
        decomposition = decompose(params)

    alpha = atom_amplitude(decomposition, grid)
    return TimeSeries(times=grid, values=np.abs(alpha) ** 2, params=params)


def state_at(
        params: ModelParams,
        t: float,
        decomposition: Optional[SpectralDecomposition] = None
) -> SingleExcitationState:
    """
    Полный вектор состояния |ψ(t)> = Σ_m v_m exp(-i E_m t) <v_m|e>

    Args:
        params: ModelParams
        t: Момент времени
        decomposition: Готовое разложение (иначе строится)

    Returns:
        SingleExcitationState
    """
    if decomposition is None:
        decomposition = decompose(params)

    V = decomposition.eigenvectors
    phases = np.exp(-1j * decomposition.eigenvalues * float(t))
    amplitudes = V @ (phases * np.conj(V[0, :]))

    return SingleExcitationState(amplitudes=amplitudes)


def photon_density(state: SingleExcitationState) -> np.ndarray:
    """|β_j|^2 по позициям -j_M..j_M"""
    return np.abs(state.cavity_amplitudes) ** 2


def population_derivative(
        params: ModelParams,
        t,
        step: Optional[float] = None,
        richardson: Optional[bool] = None,
        noise_floor: Optional[float] = None
) -> np.ndarray:
    """
    ∂P_e/∂Ω центральной разностью [P(Ω+h) - P(Ω-h)] / 2h

    С richardson=True добавляется шаг Ричардсона (4 D(h/2) - D(h)) / 3.
    Если |P(Ω+h) - P(Ω-h)| ниже noise_floor, производная в точке равна 0.
    Порог абсолютный: при h = 1e-5 и пороге 1e-10 обнуляются все |∂P/∂Ω| < 5e-6,
    в том числе настоящие малые значения в начале эволюции (∂P/∂Ω ∝ J^2 Δ t^4 / 6
    при t → 0). noise_floor=0 отключает отсечку.

    Args:
        params: ModelParams
        t: Момент или сетка моментов
        step: Шаг h по Ω (по умолчанию из config)
        richardson: Уточнение Ричардсона (по умолчанию из config)
        noise_floor: Порог шума разности (по умолчанию из config)

    Returns:
        Массив производных той же длины, что t
    """
    from config import config

    if step is None:
        step = config.DERIVATIVE_STEP
    if richardson is None:
        richardson = config.DERIVATIVE_RICHARDSON
    if noise_floor is None:
        noise_floor = config.DERIVATIVE_NOISE_FLOOR

    if step <= 0:
        raise ParameterError("derivative step must be positive", field="step")

    grid = validate_time_grid(t)
    omega = params.omega_atom

    def _difference(h: float) -> np.ndarray:
        upper = evolve(params.with_changes(omega_atom=omega + h), grid).values
        lower = evolve(params.with_changes(omega_atom=omega - h), grid).values
        return upper - lower

    delta = _difference(step)
    derivative = delta / (2.0 * step)

    if richardson:
        half = _difference(step / 2.0) / step
        derivative = (4.0 * half - derivative) / 3.0

    cut = np.abs(delta) < noise_floor
    if np.any(cut):
        logger.debug(
            f"Derivative below noise floor {noise_floor:.0e} at {int(cut.sum())}/{cut.size} times "
            f"(|dP/dOmega| < {noise_floor / (2.0 * step):.1e})"
        )
    derivative[cut] = 0.0

    return derivative
