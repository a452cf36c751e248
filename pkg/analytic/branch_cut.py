"""
Branch Cut And Long-Time Law
Файл: analytic/branch_cut.py

Амплитуда бесконечной решётки:
    α(t) = A1 e^{-i x1 t} + A2 e^{-i x2 t} + I(t),
    I(t) = ∫_{-2ξ}^{2ξ} C(x) e^{i(x - ω0) t} dx
с плотностью разреза (x - сдвиг от центра зоны)
    C(x) = J^2 √(4ξ^2 - x^2) / (π [(Ω - ω0 + x)^2 (4ξ^2 - x^2) + J^4]).

Интеграл берётся заменой x = 2ξ cos θ квадратурой Гаусса-Лежандра,
порядок удваивается до совпадения двух последовательных значений.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np
from scipy import special

from analytic.poles import BoundStateSolution, solve_bound_states
from system.model import ModelParams
from utils.errors import ParameterError, QuadratureConvergenceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BranchCutDensity:
    """
    Плотность разреза C(x) на x ∈ [-2ξ, 2ξ]

    Нормирована с множителем 1/π, так что A1 + A2 + ∫C dx = 1.
    """
    params: ModelParams

    @property
    def support(self) -> Tuple[float, float]:
        return -2.0 * self.params.hopping, 2.0 * self.params.hopping

    def __call__(self, x):
        p = self.params
        x = np.asarray(x, dtype=float)
        width = np.clip(4.0 * p.hopping ** 2 - x ** 2, 0.0, None)
        denominator = (p.detuning + x) ** 2 * width + p.coupling ** 4
        with np.errstate(divide='ignore', invalid='ignore'):
            density = p.coupling ** 2 * np.sqrt(width) / (math.pi * denominator)
        return np.where(width > 0, density, 0.0)


def branch_cut_density(params: ModelParams, x):
    """C(x) для сдвига x от центра зоны; ноль вне зоны и на её краях"""
    return BranchCutDensity(params)(x)


@lru_cache(maxsize=32)
def _legendre(order: int) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = special.roots_legendre(order)
    return nodes, weights


def _theta_intervals(params: ModelParams) -> list:
    """
    Разбиение [0, π] в точке резонанса cos θ0 = -(Ω - ω0)/2ξ

    Вокруг θ0 добавляются точки θ0 ± 10^k·w, где w = J^2 / (2ξ sin θ0)^2 -
    ширина лоренцевского пика C по θ.
    """
    ratio = -params.detuning / (2.0 * params.hopping)
    if not -1.0 < ratio < 1.0:
        return [(0.0, math.pi)]

    theta0 = math.acos(ratio)
    points = [0.0, theta0, math.pi]

    if params.coupling > 0:
        width = (params.coupling / (2.0 * params.hopping * math.sin(theta0))) ** 2
        step = 10.0 * width
        while step < math.pi:
            points.extend(p for p in (theta0 - step, theta0 + step) if 0.0 < p < math.pi)
            step *= 10.0

    points = sorted(points)
    return list(zip(points[:-1], points[1:]))


def _quadrature_nodes(params: ModelParams, order: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Узлы по x и веса, уже умноженные на C(x) · dx/dθ

    Returns:
        (x, w), для которых ∫C(x) e^{i x t} dx = Σ w e^{i x t}
    """
    nodes, weights = _legendre(order)
    xs, ws = [], []

    p = params
    for a, b in _theta_intervals(params):
        half = 0.5 * (b - a)
        theta = a + half * (nodes + 1.0)
        sin_t = np.sin(theta)
        x = 2.0 * p.hopping * np.cos(theta)
        band = (2.0 * p.hopping * sin_t) ** 2
        # C(x) dx = J^2 (2ξ sin θ)^2 / (π[(Δ + x)^2 (2ξ sin θ)^2 + J^4]) dθ
        integrand = p.coupling ** 2 * band / (
            math.pi * ((p.detuning + x) ** 2 * band + p.coupling ** 4)
        )
        xs.append(x)
        ws.append(half * weights * integrand)

    return np.concatenate(xs), np.concatenate(ws)


def _integrate(params: ModelParams, times: np.ndarray, order: int) -> np.ndarray:
    x, w = _quadrature_nodes(params, order)
    return np.exp(1j * np.outer(times, x)) @ w.astype(complex)


def branch_cut_integral(
        params: ModelParams,
        t,
        tol: Optional[float] = None,
        start_order: Optional[int] = None,
        max_order: Optional[int] = None
) -> np.ndarray:
    """
    Вклад разреза I(t) = ∫ C(x) e^{i(x - ω0) t} dx, измеренный от центра зоны

    Возвращается без фазы e^{-i ω0 t}; её добавляет alpha_analytic.

    Args:
        params: ModelParams
        t: Моменты времени >= 0
        tol: Допуск между двумя порядками (по умолчанию из config)
        start_order: Начальный порядок Гаусса-Лежандра
        max_order: Максимальный порядок

    Returns:
        Комплексный массив I(t) в системе отсчёта центра зоны

    Raises:
        QuadratureConvergenceError: нет сходимости до max_order
    """
    from config import config

    tol = config.QUAD_TOL if tol is None else tol
    start_order = config.QUAD_START_ORDER if start_order is None else start_order
    max_order = config.QUAD_MAX_ORDER if max_order is None else max_order

    times = np.atleast_1d(np.asarray(t, dtype=float))
    if not np.all(np.isfinite(times)) or np.any(times < 0):
        raise ParameterError("branch cut integral needs finite t >= 0", field="times")

    if params.coupling == 0:
        return np.zeros(times.shape, dtype=complex)

    result = np.empty(times.shape, dtype=complex)
    chunk = config.QUAD_TIME_CHUNK

    for start in range(0, len(times), chunk):
        block = times[start:start + chunk]
        order = start_order
        previous = _integrate(params, block, order)

        while True:
            order *= 2
            if order > max_order:
                raise QuadratureConvergenceError(
                    f"branch cut quadrature did not converge up to order {max_order} "
                    f"(t up to {block[-1]:.3g})"
                )
            current = _integrate(params, block, order)
            change = float(np.max(np.abs(current - previous)))
            previous = current
            if change < tol:
                break

        logger.debug(
            f"Branch cut: {len(block)} times up to t={block[-1]:.3g}, order {order}, "
            f"last change {change:.1e}"
        )
        result[start:start + chunk] = previous

    return result


def alpha_analytic(
        params: ModelParams,
        t,
        solution: Optional[BoundStateSolution] = None
) -> np.ndarray:
    """
    Аналитическая амплитуда α(t) = A1 e^{-i x1 t} + A2 e^{-i x2 t} + e^{-i ω0 t} I(t)

    Args:
        params: ModelParams
        t: Моменты времени >= 0
        solution: Готовое решение solve_bound_states

    Returns:
        Комплексный массив α(t)
    """
    times = np.atleast_1d(np.asarray(t, dtype=float))

    if params.coupling == 0:
        return np.exp(-1j * params.omega_atom * times)

    if solution is None:
        solution = solve_bound_states(params)

    poles = (
        solution.a1 * np.exp(-1j * solution.x1 * times)
        + solution.a2 * np.exp(-1j * solution.x2 * times)
    )
    cut = np.exp(-1j * params.omega_cavity * times) * branch_cut_integral(params, times)

    return poles + cut


def pe_longtime(
        params: ModelParams,
        t,
        solution: Optional[BoundStateSolution] = None
) -> np.ndarray:
    """
    Долговременный закон P_e = A1^2 + A2^2 + 2 A1 A2 cos(φ t)

    Args:
        params: ModelParams
        t: Моменты времени
        solution: Готовое решение solve_bound_states

    Returns:
        Массив P_e той же формы, что t
    """
    if solution is None:
        solution = solve_bound_states(params)

    t = np.asarray(t, dtype=float)
    return solution.mean + solution.amplitude * np.cos(solution.phi * t)
