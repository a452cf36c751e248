"""
Fourier Spectrum
Файл: spectral/fourier.py

Спектр регулярных осцилляций: вычитание среднего, окно (по умолчанию
прямоугольное), дополнение нулями, модуль rfft. Частоты угловые
(ω = 2π f), в единицах ξ, чтобы главный пик совпадал с φ = x1 - x2.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy import fft, signal

from system.dynamics import TimeSeries
from utils.errors import InsufficientDataError, ParameterError
from utils.validators import grid_spacing

logger = logging.getLogger(__name__)


@dataclass
class Spectrum:
    """
    Амплитудный спектр ряда

    Attributes:
        frequencies: Угловые частоты по возрастанию, от 0
        magnitudes: Амплитуды (косинус амплитуды a даёт пик высотой ≈ a)
        main_peak_freq: Частота главного пика (None, если пиков нет)
        main_peak_height: Высота главного пика
        fwhm: Полная ширина на полувысоте главного пика
        secondary_peak_freq: Старший пик ниже половины главной частоты
        secondary_peak_height: Его высота
    """
    frequencies: np.ndarray
    magnitudes: np.ndarray
    main_peak_freq: Optional[float] = None
    main_peak_height: Optional[float] = None
    fwhm: Optional[float] = None
    secondary_peak_freq: Optional[float] = None
    secondary_peak_height: Optional[float] = None

    @property
    def resolution(self) -> float:
        return float(self.frequencies[1] - self.frequencies[0])

    def to_dict(self) -> Dict[str, Any]:
        return {
            'peak': self.main_peak_freq,
            'height': self.main_peak_height,
            'fwhm': self.fwhm,
            'secondary_peak': self.secondary_peak_freq,
            'secondary_height': self.secondary_peak_height,
            'resolution': self.resolution,
        }


def _refine_peak(magnitudes: np.ndarray, index: int, df: float) -> Tuple[float, float]:
    """Параболическое уточнение положения и высоты пика по трём бинам"""
    if index <= 0 or index >= len(magnitudes) - 1:
        return index * df, float(magnitudes[index])

    left, centre, right = magnitudes[index - 1:index + 2]
    curvature = left - 2.0 * centre + right
    if curvature == 0:
        return index * df, float(centre)

    shift = 0.5 * (left - right) / curvature
    return (index + shift) * df, float(centre - 0.25 * (left - right) * shift)


def fourier_spectrum(
        series: TimeSeries,
        taper: Optional[str] = None,
        pad_factor: Optional[int] = None,
        min_samples: Optional[int] = None
) -> Spectrum:
    """
    Спектр ряда P_e(t), обычно ограниченного регулярным окном

    Args:
        series: Равномерный ряд
        taper: Имя окна scipy.signal.get_window (по умолчанию из config)
        pad_factor: Кратность дополнения нулями
        min_samples: Минимальное число отсчётов

    Returns:
        Spectrum

    Raises:
        NonUniformGridError: шаг сетки непостоянен
        InsufficientDataError: отсчётов меньше min_samples
    """
    from config import config

    taper = config.FFT_TAPER if taper is None else taper
    pad_factor = config.FFT_PAD_FACTOR if pad_factor is None else pad_factor
    min_samples = config.FFT_MIN_SAMPLES if min_samples is None else min_samples

    if pad_factor < 1:
        raise ParameterError("pad factor must be >= 1", field="pad_factor")

    count = len(series)
    if count < min_samples:
        raise InsufficientDataError(f"spectrum needs {min_samples} samples, got {count}")

    dt = grid_spacing(series.times)

    weights = signal.get_window(taper, count, fftbins=False)
    centred = (series.values - np.mean(series.values)) * weights

    nfft = fft.next_fast_len(pad_factor * count, real=True)
    magnitudes = np.abs(fft.rfft(centred, n=nfft)) * 2.0 / np.sum(weights)
    frequencies = 2.0 * np.pi * fft.rfftfreq(nfft, dt)
    df = frequencies[1] - frequencies[0]

    spectrum = Spectrum(frequencies=frequencies, magnitudes=magnitudes)

    peaks, _ = signal.find_peaks(magnitudes)
    if len(peaks) == 0:
        logger.debug("Spectrum has no peaks")
        return spectrum

    main = int(peaks[np.argmax(magnitudes[peaks])])
    spectrum.main_peak_freq, spectrum.main_peak_height = _refine_peak(magnitudes, main, df)

    widths = signal.peak_widths(
        magnitudes,
        [main],
        rel_height=0.5,
        prominence_data=(
            np.array([magnitudes[main]]),
            np.array([0]),
            np.array([len(magnitudes) - 1]),
        ),
    )
    spectrum.fwhm = float(widths[0][0] * df)

    lower = peaks[frequencies[peaks] < 0.5 * spectrum.main_peak_freq]
    if len(lower):
        secondary = int(lower[np.argmax(magnitudes[lower])])
        spectrum.secondary_peak_freq, spectrum.secondary_peak_height = _refine_peak(
            magnitudes, secondary, df
        )

    logger.debug(
        f"Spectrum: {count} samples, nfft={nfft}, main peak {spectrum.main_peak_freq:.4f} "
        f"(height {spectrum.main_peak_height:.4g}), FWHM {spectrum.fwhm:.4f}"
    )

    return spectrum
