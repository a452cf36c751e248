"""
Frequency Uncertainty
Файл: metrology/uncertainty.py

δΩ^2 = 1 / ((T/t) F(Ω)): T/t повторений длительностью t каждое.
P_e и ∂P_e/∂Ω берутся из одного из источников:
    numeric         - точная эволюция кольца + конечная разность по Ω
    longtime_exact  - долговременный закон с полюсами, перерешёнными в Ω ± h
    perturbative    - формула первого порядка по J^4
Сингулярные (F = 0) и вырожденные точки в кривую не попадают.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import numpy as np

from analytic.branch_cut import pe_longtime
from analytic.perturbative import perturbative_variance
from analytic.poles import BoundStateSolution, solve_bound_states
from metrology.fisher import fisher_information
from system.dynamics import evolve, population_derivative
from system.model import ModelParams
from utils.errors import ParameterError, SingularPointError
from utils.validators import validate_time_grid

logger = logging.getLogger(__name__)


class UncertaintySource(str, Enum):
    """Источник P_e и её производной"""
    NUMERIC = 'numeric'
    LONGTIME_EXACT = 'longtime_exact'
    PERTURBATIVE = 'perturbative'


@dataclass
class UncertaintyCurve:
    """
    Кривая δΩ(t)

    Attributes:
        times: Моменты с определённым δΩ
        delta_omega: δΩ в этих моментах
        t_total: Полная длительность T (None при per_shot)
        source: UncertaintySource
        per_shot: T = t в каждой точке
        skipped: Число отброшенных точек
        params: Параметры модели
    """
    times: np.ndarray
    delta_omega: np.ndarray
    t_total: Optional[float]
    source: UncertaintySource
    per_shot: bool = False
    skipped: int = 0
    params: Optional[ModelParams] = None

    def __len__(self) -> int:
        return len(self.times)

    def subset(self, mask) -> 'UncertaintyCurve':
        return UncertaintyCurve(
            times=self.times[mask],
            delta_omega=self.delta_omega[mask],
            t_total=self.t_total,
            source=self.source,
            per_shot=self.per_shot,
            skipped=self.skipped,
            params=self.params,
        )

    def columns(self) -> Dict[str, np.ndarray]:
        return {'t': self.times, 'delta_omega': self.delta_omega}

    def header(self) -> Dict[str, Any]:
        record: Dict[str, Any] = dict(self.params.to_dict()) if self.params else {}
        record.update({
            'source': self.source.value,
            't_total': 'per_shot' if self.per_shot else self.t_total,
            'skipped': self.skipped,
        })
        return record


def _longtime_derivative(
        params: ModelParams,
        times: np.ndarray,
        step: float,
        noise_floor: float
) -> np.ndarray:
    """∂/∂Ω долговременного закона по полюсам, найденным заново в Ω ± h"""
    omega = params.omega_atom
    upper = pe_longtime(params, times, solve_bound_states(params.with_changes(omega_atom=omega + step)))
    lower = pe_longtime(params, times, solve_bound_states(params.with_changes(omega_atom=omega - step)))
    delta = upper - lower
    derivative = delta / (2.0 * step)
    derivative[np.abs(delta) < noise_floor] = 0.0
    return derivative


def population_with_derivative(
        params: ModelParams,
        times,
        source: UncertaintySource,
        solution: Optional[BoundStateSolution] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """
    P_e и ∂P_e/∂Ω из численного или долговременного источника

    Returns:
        (pe, dpe) на сетке times
    """
    from config import config

    grid = validate_time_grid(times)
    source = UncertaintySource(source)

    if source is UncertaintySource.NUMERIC:
        return evolve(params, grid).values, population_derivative(params, grid)

    if source is UncertaintySource.LONGTIME_EXACT:
        if solution is None:
            solution = solve_bound_states(params)
        pe = pe_longtime(params, grid, solution)
        dpe = _longtime_derivative(
            params, grid, config.DERIVATIVE_STEP, config.DERIVATIVE_NOISE_FLOOR
        )
        return pe, dpe

    raise ParameterError(
        "perturbative source has no separate population derivative", field="source"
    )


def _check_times(grid: np.ndarray, t_total: Optional[float], per_shot: bool) -> None:
    if np.any(grid <= 0):
        raise ParameterError("encoding times must be positive", field="times")
    if per_shot:
        return
    if t_total is None or t_total <= 0:
        raise ParameterError("total duration must be positive", field="t_total")
    if np.any(grid > t_total * (1.0 + 1e-12)):
        raise ParameterError(
            f"encoding times must not exceed the total duration {t_total}", field="times"
        )


def uncertainty_curve(
        params: ModelParams,
        times,
        t_total: Optional[float],
        source: UncertaintySource = UncertaintySource.NUMERIC,
        per_shot: bool = False,
        solution: Optional[BoundStateSolution] = None
) -> UncertaintyCurve:
    """
    δΩ(t) на сетке с отбраковкой сингулярных точек

    Args:
        params: ModelParams
        times: Времена кодирования в (0, t_total]
        t_total: Полная длительность эксперимента T
        source: Источник P_e
        per_shot: Нормировка на один прогон (T = t)
        solution: Готовое решение для longtime_exact

    Returns:
        UncertaintyCurve
    """
    from config import config

    grid = validate_time_grid(times)
    source = UncertaintySource(source)
    _check_times(grid, t_total, per_shot)
    budget = grid if per_shot else np.full(grid.shape, float(t_total))

    if source is UncertaintySource.PERTURBATIVE:
        variance = perturbative_variance(params, grid, 1.0) / budget
        valid = np.isfinite(variance) & (variance > 0)
        delta = np.sqrt(np.where(valid, variance, 1.0))
        reason = "negative or divergent perturbative variance"
    else:
        pe, dpe = population_with_derivative(params, grid, source, solution)
        tol = config.POPULATION_TOL
        populated = (pe > tol) & (pe < 1.0 - tol)

        information = np.zeros(grid.shape)
        if np.any(populated):
            information[populated] = fisher_information(pe[populated], dpe[populated], tol=tol)

        valid = populated & (information > 0) & np.isfinite(information)
        with np.errstate(divide='ignore', invalid='ignore'):
            delta = np.sqrt(grid / (budget * information))
        reason = "zero Fisher information or degenerate population"

    skipped = int(np.count_nonzero(~valid))
    if skipped:
        logger.warning(
            f"{source.value}: {skipped} of {len(grid)} time points singular ({reason}), excluded"
        )

    return UncertaintyCurve(
        times=grid[valid],
        delta_omega=delta[valid],
        t_total=None if per_shot else float(t_total),
        source=source,
        per_shot=per_shot,
        skipped=skipped,
        params=params,
    )


def uncertainty_at(
        params: ModelParams,
        t: float,
        t_total: Optional[float],
        source: UncertaintySource = UncertaintySource.NUMERIC,
        per_shot: bool = False
) -> float:
    """
    δΩ = √(t / (T F)) в одной точке

    Raises:
        DegeneratePopulationError: P_e в {0, 1}
        SingularPointError: F = 0 или неопределённость первого порядка не определена
        PoleNotFoundError: нет связанного состояния для долговременных источников
    """
    from config import config

    grid = validate_time_grid([t])
    source = UncertaintySource(source)
    _check_times(grid, t_total, per_shot)
    budget = float(t) if per_shot else float(t_total)

    if source is UncertaintySource.PERTURBATIVE:
        variance = float(perturbative_variance(params, grid, budget)[0])
        if not math.isfinite(variance) or variance <= 0:
            raise SingularPointError(f"perturbative uncertainty is singular at t={t:.6g}")
        return math.sqrt(variance)

    pe, dpe = population_with_derivative(params, grid, source)
    information = fisher_information(float(pe[0]), float(dpe[0]), tol=config.POPULATION_TOL)

    if information <= 0:
        raise SingularPointError(f"zero Fisher information at t={t:.6g}")

    return math.sqrt(float(t) / (budget * information))
