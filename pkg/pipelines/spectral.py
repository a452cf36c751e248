"""
Spectral Pipelines
Файл: pipelines/spectral.py

spectrum           - спектр регулярного окна (spectrum.csv, spectrum.json)
duration-scaling   - длительность окна по N и фит ln(ξT) = a·N + b
convergence        - среднее и амплитуда в окне по N против бесконечной решётки
"""

import asyncio
import logging
from pathlib import Path
from typing import Optional, Sequence, Tuple

import numpy as np

from analytic.poles import BoundStateSolution, solve_bound_states
from pipelines.common import PipelineRun, RunSettings, load_series_csv
from spectral.fourier import fourier_spectrum
from spectral.stats import OscillationStats, oscillation_stats
from spectral.window import (
    OscillationWindow,
    detect_regular_window,
    duration_scaling,
    measure_regular_window,
    regular_component,
)
from system.dynamics import evolve
from utils.result_storage import RunManifest
from utils.sweep import run_sweep
from utils.validators import uniform_grid, validate_window

logger = logging.getLogger(__name__)


async def run_spectrum(
        settings: RunSettings,
        out_dir: Path,
        input_path: Optional[Path] = None,
        window: Optional[Tuple[float, float]] = None,
        remove_transient: bool = False
) -> RunManifest:
    """
    Команда spectrum

    Ряд берётся из input_path (CSV t,pe) или эволюционируется заново.
    Без явного window спектр считается по найденному регулярному окну.
    С remove_transient из ряда вычитается вклад разреза, и спектр
    берётся от начала ряда до конца окна.
    """
    run = PipelineRun('spectrum', settings, out_dir)
    params = settings.params

    if input_path is not None:
        series, _ = load_series_csv(input_path)
        if series.params is not None:
            params = series.params
        logger.info(f"Loaded {len(series)} samples from {input_path}")
    else:
        grid = uniform_grid(0.0, settings.t_max, settings.dt)
        series = await asyncio.to_thread(evolve, params, grid)

    solution = await asyncio.to_thread(solve_bound_states, params)

    if window is None:
        detected = await asyncio.to_thread(detect_regular_window, series, solution)
    else:
        t_start, t_end = validate_window(window)
        detected = OscillationWindow(t_start=t_start, t_end=t_end)

    logger.info(f"Window [{detected.t_start:.2f}, {detected.t_end:.2f}]")

    if remove_transient:
        regular = await asyncio.to_thread(regular_component, series, solution, params)
        segment = regular.restrict(float(series.times[0]), detected.t_end)
    else:
        segment = series.restrict(detected.t_start, detected.t_end)

    spectrum = fourier_spectrum(segment)

    header = settings.record()
    header.update({'t_start': float(segment.times[0]), 't_end': detected.t_end})
    run.storage.save_csv(
        'spectrum.csv',
        {'freq': spectrum.frequencies, 'magnitude': spectrum.magnitudes},
        header=header,
    )

    summary = spectrum.to_dict()
    summary.update({
        'window': detected.to_dict(),
        'remove_transient': remove_transient,
        'phi': solution.phi,
        'binding_upper': solution.binding_upper,
        'binding_lower': solution.binding_lower,
    })
    run.storage.save_json('spectrum.json', summary)

    if spectrum.main_peak_freq is not None:
        logger.info(
            f"Main peak {spectrum.main_peak_freq:.4f} (phi {solution.phi:.4f}), "
            f"FWHM {spectrum.fwhm:.4f}"
        )

    return run.finish({'window': [detected.t_start, detected.t_end]})


async def run_duration_scaling(
        settings: RunSettings,
        out_dir: Path,
        qubits: Sequence[int]
) -> RunManifest:
    """Команда duration-scaling: durations.csv + duration_fit.json"""
    run = PipelineRun('duration-scaling', settings, out_dir)

    logger.info(f"Measuring regular windows for N={list(qubits)}...")
    result = await asyncio.to_thread(duration_scaling, settings.params, qubits, settings.dt)

    durations = np.asarray(result.durations)
    run.storage.save_csv(
        'durations.csv',
        {
            'qubits': np.asarray(result.qubits, dtype=float),
            'duration': durations,
            'log_duration': np.log(durations),
        },
        header=settings.record(),
    )
    run.storage.save_json('duration_fit.json', result.to_dict())

    logger.info(
        f"ln(T) = {result.fit.slope:.5f} N + {result.fit.intercept:.5f}, r={result.fit.r:.5f}, "
        f"doubling factor {result.doubling_factor:.4f}"
    )

    return run.finish({'qubits': list(qubits)})


def _window_stats(settings: RunSettings, qubits: int, solution: BoundStateSolution) -> OscillationStats:
    params = settings.params.with_qubits(qubits)
    series, window = measure_regular_window(params, solution, dt=settings.dt)
    return oscillation_stats(series.restrict(window.t_start, window.t_end), period=solution.period)


async def run_convergence(
        settings: RunSettings,
        out_dir: Path,
        qubits: Sequence[int]
) -> RunManifest:
    """Команда convergence: convergence.csv (qubits, mean, amplitude и аналитические значения)"""
    run = PipelineRun('convergence', settings, out_dir)

    solution = await asyncio.to_thread(solve_bound_states, settings.params)
    values = sorted({int(q) for q in qubits})

    sweep = await asyncio.to_thread(
        run_sweep,
        lambda q: _window_stats(settings, q, solution),
        values,
    )

    kept = [q for q in values if q in sweep.results]
    count = len(kept)

    run.storage.save_csv(
        'convergence.csv',
        {
            'qubits': np.asarray(kept, dtype=float),
            'mean': np.array([sweep.results[q].mean for q in kept]),
            'amplitude': np.array([sweep.results[q].amplitude for q in kept]),
            'mean_analytic': np.full(count, solution.mean),
            'amplitude_analytic': np.full(count, abs(solution.amplitude)),
        },
        header=settings.record(),
    )

    for q in kept:
        stats = sweep.results[q]
        logger.info(f"N={q}: mean {stats.mean:.6f}, amplitude {stats.amplitude:.6f}")
    logger.info(f"Analytic: mean {solution.mean:.6f}, amplitude {abs(solution.amplitude):.6f}")

    return run.finish({'qubits': values, 'excluded': sorted(sweep.failures)})
