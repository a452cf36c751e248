"""
Regular Oscillation Window
Файл: spectral/window.py

Поиск участка, где P_e(t) следует закону
    A1^2 + A2^2 + 2 A1 A2 cos(φ t + ψ)
со свободной фазой ψ. Ряд режется на скользящие окна по WINDOW_PERIODS
периодов с шагом в один период; окно годится, если RMS отклонения от
закона меньше WINDOW_THRESHOLD * |2 A1 A2|. Регулярный режим - самая
длинная серия подряд идущих годных окон.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from analytic.poles import BoundStateSolution, solve_bound_states
from spectral.fitting import LinearFit, linear_fit
from system.dynamics import TimeSeries, evolve
from system.model import ModelParams
from utils.errors import InsufficientDataError, NoRegularWindowError, ParameterError
from utils.sweep import run_sweep
from utils.validators import grid_spacing, uniform_grid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OscillationWindow:
    """
    Границы регулярного режима

    Attributes:
        t_start: Начало (1/ξ)
        t_end: Конец (1/ξ)
        windows: Число годных скользящих окон в серии
    """
    t_start: float
    t_end: float
    windows: int = 0

    @property
    def duration(self) -> float:
        return self.t_end - self.t_start

    def to_dict(self) -> Dict[str, Any]:
        return {
            't_start': self.t_start,
            't_end': self.t_end,
            'duration': self.duration,
            'windows': self.windows,
        }


@dataclass
class DurationScaling:
    """
    Масштабирование длительности регулярного режима с числом кубитов

    Attributes:
        qubits: N с найденным окном
        durations: Длительности окон
        fit: LinearFit по (N, ln(ξ·duration))
        excluded: N без окна
    """
    qubits: List[int]
    durations: List[float]
    fit: LinearFit
    excluded: List[int] = field(default_factory=list)

    @property
    def doubling_factor(self) -> float:
        """Рост длительности на один кубит, exp(slope)"""
        return math.exp(self.fit.slope)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'qubits': self.qubits,
            'durations': self.durations,
            'fit': self.fit.to_dict(),
            'doubling_factor': self.doubling_factor,
            'excluded': self.excluded,
        }


def _window_starts(length: int, width: int, hop: int) -> List[int]:
    """Начала скользящих окон; последнее окно прижато к концу ряда"""
    starts = list(range(0, length - width + 1, hop))
    if starts and starts[-1] != length - width:
        starts.append(length - width)
    return starts


def _window_rms(
        times: np.ndarray,
        values: np.ndarray,
        phi: float,
        mean: float,
        amplitude: float
) -> float:
    """RMS отклонения от закона с подогнанной фазой"""
    design = np.column_stack([np.cos(phi * times), np.sin(phi * times)])
    (c, s), *_ = np.linalg.lstsq(design, values - mean, rcond=None)
    psi = math.atan2(-s, c)
    model = mean + amplitude * np.cos(phi * times + psi)
    return float(np.sqrt(np.mean((values - model) ** 2)))


def detect_regular_window(
        series: TimeSeries,
        model: BoundStateSolution,
        periods: Optional[float] = None,
        threshold: Optional[float] = None,
        min_periods: Optional[float] = None
) -> OscillationWindow:
    """
    Найти самый длинный участок регулярных осцилляций

    Args:
        series: Равномерный ряд P_e(t)
        model: Решение с весами (solve_bound_states)
        periods: Ширина скользящего окна в периодах (по умолчанию из config)
        threshold: Порог RMS в долях |2 A1 A2|
        min_periods: Минимальная длина ряда в периодах

    Returns:
        OscillationWindow

    Raises:
        InsufficientDataError: ряд короче min_periods периодов
        NoRegularWindowError: ни одно окно не прошло критерий
    """
    from config import config

    periods = config.WINDOW_PERIODS if periods is None else periods
    threshold = config.WINDOW_THRESHOLD if threshold is None else threshold
    min_periods = config.WINDOW_MIN_PERIODS if min_periods is None else min_periods

    period = model.period
    if series.span < min_periods * period:
        raise InsufficientDataError(
            f"series spans {series.span:.3g}, needs at least {min_periods:g} periods "
            f"({min_periods * period:.3g})"
        )

    dt = grid_spacing(series.times)
    width = max(int(round(periods * period / dt)), 8)
    hop = max(int(round(period / dt)), 1)
    starts = _window_starts(len(series), width, hop)

    mean, amplitude = model.mean, model.amplitude
    limit = threshold * abs(amplitude)

    compliant = [
        _window_rms(
            series.times[s:s + width], series.values[s:s + width],
            model.phi, mean, amplitude
        ) < limit
        for s in starts
    ]

    best_first, best_count = -1, 0
    run_first, run_count = -1, 0
    for i, ok in enumerate(compliant):
        if ok:
            if run_count == 0:
                run_first = i
            run_count += 1
            if run_count > best_count:
                best_first, best_count = run_first, run_count
        else:
            run_count = 0

    if best_count == 0:
        raise NoRegularWindowError(
            f"no regular oscillation window: none of {len(starts)} windows "
            f"within {threshold:.0%} of the bound-state amplitude"
        )

    first = starts[best_first]
    last = starts[best_first + best_count - 1] + width - 1

    window = OscillationWindow(
        t_start=float(series.times[first]),
        t_end=float(series.times[last]),
        windows=best_count,
    )

    logger.debug(
        f"Regular window [{window.t_start:.2f}, {window.t_end:.2f}] "
        f"({best_count}/{len(starts)} windows compliant)"
    )

    return window


def regular_component(
        series: TimeSeries,
        solution: BoundStateSolution,
        params: Optional[ModelParams] = None
) -> TimeSeries:
    """
    Ряд без вклада разреза: P_e - |α_an|^2 + закон A1^2 + A2^2 + 2 A1 A2 cos(φ t)

    До прихода ревайвла (t < n/2ξ) кольцо совпадает с бесконечной решёткой,
    поэтому остаются только регулярные осцилляции, начиная с t = 0.

    Args:
        series: Ряд кольца
        solution: Решение с весами (solve_bound_states)
        params: Параметры (по умолчанию series.params, затем solution.params)

    Returns:
        TimeSeries той же сетки
    """
    from analytic.branch_cut import alpha_analytic, pe_longtime

    if params is None:
        params = series.params if series.params is not None else solution.params
    if params is None:
        raise ParameterError("model parameters are required to remove the transient", field="params")

    analytic = np.abs(alpha_analytic(params, series.times, solution)) ** 2
    regular = series.values - analytic + pe_longtime(params, series.times, solution)

    return TimeSeries(series.times, regular, params)


def series_length(params: ModelParams) -> float:
    """Длина ряда для поиска окна: max(WINDOW_TMAX_FACTOR · n/ξ, WINDOW_TMAX_MIN)"""
    from config import config

    return max(
        config.WINDOW_TMAX_FACTOR * params.cavities / params.hopping,
        config.WINDOW_TMAX_MIN,
    )


def measure_regular_window(
        params: ModelParams,
        solution: Optional[BoundStateSolution] = None,
        dt: Optional[float] = None,
        t_max: Optional[float] = None
) -> Tuple[TimeSeries, OscillationWindow]:
    """
    Эволюционировать ряд и найти в нём регулярное окно

    Args:
        params: ModelParams
        solution: Решение бесконечной решётки (иначе решается)
        dt: Шаг сетки (по умолчанию из config)
        t_max: Длина ряда (по умолчанию series_length)

    Returns:
        (ряд, окно)
    """
    from config import config

    if solution is None:
        solution = solve_bound_states(params)

    dt = config.DEFAULT_DT if dt is None else dt
    t_max = series_length(params) if t_max is None else t_max

    series = evolve(params, uniform_grid(0.0, t_max, dt))
    window = detect_regular_window(series, solution)

    logger.info(
        f"n={params.cavities}: regular window [{window.t_start:.2f}, {window.t_end:.2f}], "
        f"duration {window.duration:.2f}"
    )

    return series, window


def fit_duration_scaling(qubits: Sequence[int], durations: Sequence[float]) -> LinearFit:
    """LinearFit по (N, ln(ξ·duration))"""
    durations = np.asarray(durations, dtype=float)
    if np.any(durations <= 0):
        raise InsufficientDataError("window durations must be positive")
    return linear_fit(np.asarray(qubits, dtype=float), np.log(durations))


def duration_scaling(
        params: ModelParams,
        qubits: Sequence[int],
        dt: Optional[float] = None,
        max_workers: Optional[int] = None
) -> DurationScaling:
    """
    Длительность регулярного режима для ряда N и фит ln(ξT) = a·N + b

    Args:
        params: Шаблон параметров (n заменяется для каждого N)
        qubits: Значения N
        dt: Шаг сетки
        max_workers: Параллельных задач

    Returns:
        DurationScaling

    Raises:
        InsufficientDataError: окна найдены меньше чем для DURATION_MIN_POINTS значений N
    """
    from config import config

    solution = solve_bound_states(params)
    values = sorted({int(q) for q in qubits})

    sweep = run_sweep(
        lambda q: measure_regular_window(params.with_qubits(q), solution, dt=dt)[1],
        values,
        max_workers=max_workers,
    )

    kept = [q for q in values if q in sweep.results]
    excluded = sorted(sweep.failures)

    if excluded:
        logger.warning(f"Duration scaling: no regular window for N={excluded}")

    if len(kept) < config.DURATION_MIN_POINTS:
        raise InsufficientDataError(
            f"duration scaling needs windows for at least {config.DURATION_MIN_POINTS} "
            f"qubit counts (got {len(kept)})"
        )

    durations = [sweep.results[q].duration for q in kept]
    fit = fit_duration_scaling(kept, durations)

    return DurationScaling(qubits=kept, durations=durations, fit=fit, excluded=excluded)
