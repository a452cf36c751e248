"""
Linear Fits
Файл: spectral/fitting.py

Общий МНК-фит для законов масштабирования
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Sequence

import numpy as np
from scipy import stats

from utils.errors import InsufficientDataError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearFit:
    """
    y = slope * x + intercept

    Attributes:
        slope: Наклон
        intercept: Свободный член
        r: Коэффициент корреляции Пирсона (0 для постоянного y)
        points: Число точек
        stderr: Стандартная ошибка наклона (0 для двух точек и постоянного y)
    """
    slope: float
    intercept: float
    r: float
    points: int
    stderr: float = 0.0

    def predict(self, x):
        return self.slope * np.asarray(x, dtype=float) + self.intercept

    def to_dict(self) -> Dict[str, Any]:
        return {
            'slope': self.slope,
            'intercept': self.intercept,
            'r': self.r,
            'points': self.points,
            'stderr': self.stderr,
        }


def linear_fit(xs: Sequence[float], ys: Sequence[float]) -> LinearFit:
    """
    Обычный МНК с коэффициентом Пирсона

    Args:
        xs: Абсциссы (не менее двух различных)
        ys: Ординаты

    Returns:
        LinearFit

    Raises:
        InsufficientDataError: меньше двух точек или все x равны
    """
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)

    if x.shape != y.shape or x.ndim != 1:
        raise InsufficientDataError("linear fit needs two 1-D arrays of equal length")
    if len(x) < 2 or np.ptp(x) == 0:
        raise InsufficientDataError("linear fit needs at least two distinct x values")

    if np.ptp(y) == 0:
        # linregress gives nan r for a constant y
        return LinearFit(slope=0.0, intercept=float(y[0]), r=0.0, points=len(x))

    result = stats.linregress(x, y)
    r = float(np.clip(result.rvalue, -1.0, 1.0))

    logger.debug(f"Linear fit over {len(x)} points: slope={result.slope:.6f}, r={r:.6f}")

    return LinearFit(
        slope=float(result.slope),
        intercept=float(result.intercept),
        r=r,
        points=len(x),
        stderr=float(result.stderr) if np.isfinite(result.stderr) else 0.0,
    )
