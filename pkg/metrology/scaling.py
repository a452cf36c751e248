"""
Uncertainty Scaling
Файл: metrology/scaling.py

Фит ln(δΩ/ξ) = slope · ln(1/ξt) + intercept по оптимальным моментам
измерения. Оптимальные моменты - минимумы δΩ в последовательных блоках
заданной длины (обычно период 2π/φ), отсчитанных от начала окна; без
длины блока - локальные минимумы кривой.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy import signal

from metrology.uncertainty import UncertaintyCurve
from spectral.fitting import linear_fit
from utils.errors import InsufficientDataError, ParameterError
from utils.validators import validate_window

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScalingFit:
    """
    Attributes:
        slope: Показатель δΩ ∝ t^{-slope}
        intercept: Свободный член в логарифмах
        r: Коэффициент Пирсона
        points: Число оптимальных моментов в фите
        window: Интервал времени фита
        stderr: Стандартная ошибка наклона
    """
    slope: float
    intercept: float
    r: float
    points: int
    window: Tuple[float, float]
    stderr: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'slope': self.slope,
            'intercept': self.intercept,
            'r': self.r,
            'points': self.points,
            'window': list(self.window),
            'stderr': self.stderr,
        }


def optimal_times(
        curve: UncertaintyCurve,
        block: Optional[float] = None,
        start: Optional[float] = None
) -> UncertaintyCurve:
    """
    Оптимальные моменты измерения

    Args:
        curve: Кривая δΩ(t)
        block: Длина блока; минимум δΩ берётся в каждом блоке
        start: Начало отсчёта блоков (по умолчанию первый момент кривой)

    Returns:
        Подкривая из оптимальных моментов
    """
    if len(curve) == 0:
        return curve

    if block is None:
        indices = signal.argrelmin(curve.delta_omega)[0]
        return curve.subset(indices)

    if block <= 0:
        raise ParameterError("block length must be positive", field="block")

    origin = curve.times[0] if start is None else start
    labels = np.floor((curve.times - origin) / block).astype(int)

    indices = []
    for label in np.unique(labels):
        members = np.flatnonzero(labels == label)
        indices.append(members[np.argmin(curve.delta_omega[members])])

    return curve.subset(np.array(indices, dtype=int))


def scaling_fit(
        curve: UncertaintyCurve,
        window: Optional[Tuple[float, float]] = None,
        block: Optional[float] = None,
        min_points: Optional[int] = None
) -> ScalingFit:
    """
    Фит степенного закона δΩ ∝ t^{-slope}

    Args:
        curve: Кривая δΩ(t) (фиксированный T или per_shot)
        window: Интервал (t_start, t_end); по умолчанию вся кривая
        block: Длина блока для оптимальных моментов
        min_points: Минимум оптимальных моментов (по умолчанию из config)

    Returns:
        ScalingFit

    Raises:
        InsufficientDataError: оптимальных моментов меньше min_points
    """
    from config import config

    min_points = config.SCALING_MIN_POINTS if min_points is None else min_points

    if window is None:
        if len(curve) == 0:
            raise InsufficientDataError("uncertainty curve is empty")
        window = (float(curve.times[0]), float(curve.times[-1]))
    t_start, t_end = validate_window(window, field="window")

    inside = (curve.times >= t_start) & (curve.times <= t_end)
    optimal = optimal_times(curve.subset(inside), block=block, start=t_start)

    if len(optimal) < min_points:
        raise InsufficientDataError(
            f"scaling fit needs {min_points} optimal points in [{t_start:g}, {t_end:g}], "
            f"got {len(optimal)}"
        )

    fit = linear_fit(np.log(1.0 / optimal.times), np.log(optimal.delta_omega))

    logger.info(
        f"Scaling fit ({curve.source.value}{', per shot' if curve.per_shot else ''}): "
        f"slope={fit.slope:.5f}, intercept={fit.intercept:.5f}, r={fit.r:.6f}, "
        f"{fit.points} points"
    )

    return ScalingFit(
        slope=fit.slope,
        intercept=fit.intercept,
        r=fit.r,
        points=fit.points,
        window=(t_start, t_end),
        stderr=fit.stderr,
    )
