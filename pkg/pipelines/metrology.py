"""
Metrology Pipelines
Файл: pipelines/metrology.py

metrology  - кривые δΩ(t) для одного или нескольких источников
scaling    - фит ln δΩ против ln(1/t) по оптимальным моментам
"""

import asyncio
import logging
from pathlib import Path
from typing import Optional, Sequence, Tuple

from analytic.poles import solve_bound_states
from metrology.scaling import optimal_times, scaling_fit
from metrology.uncertainty import UncertaintySource, uncertainty_curve
from pipelines.common import PipelineRun, RunSettings
from utils.errors import ParameterError, PoleNotFoundError
from utils.result_storage import RunManifest
from utils.validators import uniform_grid, validate_window

logger = logging.getLogger(__name__)


def _encoding_grid(window: Tuple[float, float], dt: float):
    t_start, t_end = validate_window(window)
    if t_start < 0:
        raise ParameterError("encoding window must start at t >= 0", field="window")
    grid = uniform_grid(t_start, t_end, dt)
    return grid[grid > 0]


async def run_metrology(
        settings: RunSettings,
        out_dir: Path,
        sources: Sequence[UncertaintySource],
        window: Optional[Tuple[float, float]] = None,
        per_shot: bool = False
) -> RunManifest:
    """
    Команда metrology: uncertainty_<source>.csv на источник и metrology.json

    Args:
        settings: RunSettings (t_total - бюджет T, по умолчанию конец окна)
        out_dir: Директория результатов
        sources: Источники P_e
        window: Интервал времён кодирования (по умолчанию (0, t_max])
        per_shot: T = t в каждой точке
    """
    run = PipelineRun('metrology', settings, out_dir)

    window = window or (0.0, settings.t_max)
    grid = _encoding_grid(window, settings.dt)
    t_total = None if per_shot else (settings.t_total or float(grid[-1]))

    summary = {'t_total': t_total, 'per_shot': per_shot, 'sources': {}}

    for source in sources:
        source = UncertaintySource(source)
        logger.info(f"Source {source.value}: {len(grid)} time points...")

        curve = await asyncio.to_thread(
            uncertainty_curve, settings.params, grid, t_total, source, per_shot
        )
        run.storage.save_csv(f'uncertainty_{source.value}.csv', curve.columns(), header=curve.header())

        summary['sources'][source.value] = {'valid': len(curve), 'skipped': curve.skipped}
        logger.info(f"Source {source.value}: {len(curve)} valid, {curve.skipped} singular")

    run.storage.save_json('metrology.json', summary)

    return run.finish({
        'sources': [UncertaintySource(s).value for s in sources],
        'window': list(window),
        'per_shot': per_shot,
    })


async def run_scaling(
        settings: RunSettings,
        out_dir: Path,
        source: UncertaintySource,
        window: Tuple[float, float],
        block: Optional[float] = None,
        per_shot: bool = False
) -> RunManifest:
    """
    Команда scaling: scaling_fit.json и scaling_optimal.csv

    Без явного block оптимальные моменты ищутся в блоках длины 2π/φ;
    если связанных состояний нет - по локальным минимумам.
    """
    run = PipelineRun('scaling', settings, out_dir)
    source = UncertaintySource(source)

    grid = _encoding_grid(window, settings.dt)
    t_total = None if per_shot else (settings.t_total or float(grid[-1]))

    if block is None:
        try:
            solution = await asyncio.to_thread(solve_bound_states, settings.params)
            block = solution.period
        except PoleNotFoundError as e:
            logger.warning(f"{e}; optimal times taken at local minima")

    curve = await asyncio.to_thread(
        uncertainty_curve, settings.params, grid, t_total, source, per_shot
    )
    fit = scaling_fit(curve, window=window, block=block)
    optimal = optimal_times(curve, block=block, start=window[0])

    run.storage.save_csv('scaling_optimal.csv', optimal.columns(), header=curve.header())

    record = fit.to_dict()
    record.update({'source': source.value, 'per_shot': per_shot, 'block': block})
    run.storage.save_json('scaling_fit.json', record)

    return run.finish({'source': source.value, 'window': list(window), 'block': block})
