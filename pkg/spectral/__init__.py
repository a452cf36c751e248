"""
Spectral Package
Обработка рядов населённости: регулярное окно, спектр, статистика, фиты
"""

from .fitting import LinearFit, linear_fit
from .window import (
    OscillationWindow,
    DurationScaling,
    detect_regular_window,
    series_length,
    measure_regular_window,
    fit_duration_scaling,
    duration_scaling
)
from .fourier import Spectrum, fourier_spectrum
from .stats import OscillationStats, oscillation_stats

__all__ = [
    # Fitting
    'LinearFit',
    'linear_fit',

    # Window
    'OscillationWindow',
    'DurationScaling',
    'detect_regular_window',
    'series_length',
    'measure_regular_window',
    'fit_duration_scaling',
    'duration_scaling',

    # Fourier
    'Spectrum',
    'fourier_spectrum',

    # Stats
    'OscillationStats',
    'oscillation_stats',
]
