"""
Oscillation Statistics
Файл: spectral/stats.py

Среднее и амплитуда регулярных осцилляций: среднее - по времени
(трапеции), амплитуда - половина размаха между 1-м и 99-м перцентилями.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np
from scipy import integrate

from spectral.fourier import fourier_spectrum
from system.dynamics import TimeSeries
from utils.errors import InsufficientDataError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OscillationStats:
    """
    Attributes:
        mean: Среднее по времени
        amplitude: Половина робастного размаха
        period: Период, по которому проверялась длина ряда (None - не проверялась)
    """
    mean: float
    amplitude: float
    period: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {'mean': self.mean, 'amplitude': self.amplitude, 'period': self.period}


def oscillation_stats(
        series: TimeSeries,
        period: Optional[float] = None,
        percentile: Optional[float] = None,
        min_periods: Optional[float] = None
) -> OscillationStats:
    """
    Среднее и амплитуда ряда

    Args:
        series: Ряд, обычно ограниченный регулярным окном
        period: Период осцилляций (иначе берётся из главного пика спектра)
        percentile: Нижний перцентиль размаха, верхний 100 - percentile
        min_periods: Минимальная длина ряда в периодах

    Returns:
        OscillationStats

    Raises:
        InsufficientDataError: ряд короче min_periods периодов
    """
    from config import config

    percentile = config.STATS_PERCENTILE if percentile is None else percentile
    min_periods = config.STATS_MIN_PERIODS if min_periods is None else min_periods

    if len(series) < 2:
        raise InsufficientDataError("oscillation stats need at least two samples")

    if period is None:
        spectrum = fourier_spectrum(series)
        if spectrum.main_peak_freq:
            period = 2.0 * math.pi / spectrum.main_peak_freq

    if period is not None and series.span < min_periods * period:
        raise InsufficientDataError(
            f"window of {series.span:.3g} is shorter than {min_periods:g} periods ({period:.3g} each)"
        )

    mean = float(integrate.trapezoid(series.values, series.times) / series.span)
    low, high = np.percentile(series.values, [percentile, 100.0 - percentile])
    amplitude = float(0.5 * (high - low))

    logger.debug(f"Oscillation stats: mean={mean:.6f}, amplitude={amplitude:.6f}")

    return OscillationStats(mean=mean, amplitude=amplitude, period=period)
