from __future__ import annotations

import numpy as np
import pytest

from spectral.fourier import fourier_spectrum
from system.dynamics import TimeSeries
from utils.errors import InsufficientDataError, NonUniformGridError, ParameterError


def _cosine(freq: float, amplitude: float = 1.0, span: float = 100.0, dt: float = 0.02) -> TimeSeries:
    times = np.arange(0.0, span, dt)
    return TimeSeries(times, 0.4 + amplitude * np.cos(freq * times))


def test_pure_cosine_peak():
    spectrum = fourier_spectrum(_cosine(2.5, amplitude=0.7))

    assert abs(spectrum.main_peak_freq - 2.5) < spectrum.resolution
    assert spectrum.main_peak_height == pytest.approx(0.7, rel=0.02)
    assert spectrum.frequencies[0] == 0.0
    assert np.all(np.diff(spectrum.frequencies) > 0)


def test_fwhm_shrinks_with_longer_record():
    short = fourier_spectrum(_cosine(2.5, span=50.0))
    long = fourier_spectrum(_cosine(2.5, span=200.0))

    assert long.fwhm < short.fwhm
    assert short.fwhm == pytest.approx(4 * long.fwhm, rel=0.1)


def test_secondary_peak_below_half_main():
    times = np.arange(0.0, 200.0, 0.02)
    series = TimeSeries(times, np.cos(4.4 * times) + 0.2 * np.cos(0.9 * times) + 0.3 * np.cos(3.0 * times))
    spectrum = fourier_spectrum(series)

    assert spectrum.main_peak_freq == pytest.approx(4.4, abs=0.05)
    assert spectrum.secondary_peak_freq == pytest.approx(0.9, abs=0.05)
    assert spectrum.secondary_peak_height == pytest.approx(0.2, rel=0.05)


def test_constant_series_has_no_peak():
    times = np.arange(0.0, 20.0, 0.02)
    spectrum = fourier_spectrum(TimeSeries(times, np.full_like(times, 0.25)))

    assert spectrum.main_peak_freq is None
    assert spectrum.fwhm is None
    assert spectrum.to_dict()['peak'] is None


def test_hann_taper_is_accepted():
    spectrum = fourier_spectrum(_cosine(2.5), taper='hann')

    assert abs(spectrum.main_peak_freq - 2.5) < spectrum.resolution


def test_non_uniform_grid():
    times = np.sort(np.random.default_rng(1).uniform(0.0, 50.0, 1000))

    with pytest.raises(NonUniformGridError):
        fourier_spectrum(TimeSeries(times, np.cos(times)))


def test_too_few_samples():
    with pytest.raises(InsufficientDataError):
        fourier_spectrum(_cosine(2.5, span=2.0))


def test_bad_pad_factor():
    with pytest.raises(ParameterError):
        fourier_spectrum(_cosine(2.5), pad_factor=0)


def test_ring_spectrum_peaks_at_beat_frequency(ring_window, ring_solution):
    series, window = ring_window
    spectrum = fourier_spectrum(series.restrict(window.t_start, window.t_end))

    assert spectrum.main_peak_freq == pytest.approx(4.42, abs=0.05)
    assert abs(spectrum.main_peak_freq - ring_solution.phi) <= spectrum.resolution
    assert 0.04 <= spectrum.fwhm <= 0.12
    assert spectrum.secondary_peak_freq == pytest.approx(ring_solution.binding_upper, abs=0.08)


def test_peak_narrows_with_ring_size(ring_params, ring_solution):
    from spectral.window import measure_regular_window

    widths = []
    for qubits in (6, 7, 8):
        series, window = measure_regular_window(ring_params.with_qubits(qubits), ring_solution)
        widths.append(fourier_spectrum(series.restrict(window.t_start, window.t_end)).fwhm)

    assert widths[0] > widths[1] > widths[2]


def _regular_spectrum(params, solution):
    from spectral.window import measure_regular_window, regular_component, series_length

    t_max = min(series_length(params), 100.0)
    series, window = measure_regular_window(params, solution, t_max=t_max)
    return fourier_spectrum(regular_component(series, solution).restrict(0.0, window.t_end))


@pytest.mark.slow
def test_regular_peak_width_by_ring_size(ring_params, ring_solution):
    expected = {6: 0.288, 7: 0.135, 8: 0.082}

    widths = {}
    for qubits, fwhm in expected.items():
        spectrum = _regular_spectrum(ring_params.with_qubits(qubits), ring_solution)
        assert abs(spectrum.main_peak_freq - ring_solution.phi) <= spectrum.resolution
        assert spectrum.fwhm == pytest.approx(fwhm, rel=0.25)
        widths[qubits] = spectrum.fwhm

    assert widths[6] > widths[7] > widths[8]


def test_regular_component_keeps_law_before_revival(ring_params, ring_solution):
    from analytic.branch_cut import pe_longtime
    from spectral.window import regular_component
    from system.dynamics import evolve
    from utils.validators import uniform_grid

    series = evolve(ring_params, uniform_grid(0.0, 40.0, 0.02))
    regular = regular_component(series, ring_solution)

    law = pe_longtime(ring_params, series.times, ring_solution)
    assert np.max(np.abs(regular.values - law)) < 1e-4
    assert np.max(np.abs(series.values[:100] - law[:100])) > 0.05
