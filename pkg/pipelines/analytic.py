"""
Analytic Pipelines
Файл: pipelines/analytic.py

Полюса связанных состояний (poles.json) и их зависимость от параметра
(landscape.csv).
"""

import asyncio
import logging
from pathlib import Path
from typing import Sequence

from analytic.landscape import bound_state_landscape
from analytic.perturbative import perturbative_solution
from analytic.poles import solve_bound_states
from pipelines.common import PipelineRun, RunSettings
from utils.errors import BandEdgeDegeneracyError
from utils.result_storage import RunManifest

logger = logging.getLogger(__name__)


async def run_poles(settings: RunSettings, out_dir: Path) -> RunManifest:
    """
    Команда poles: точные полюса, веса и решение первого порядка

    Raises:
        PoleNotFoundError: нет одного из связанных состояний (exit 3)
    """
    run = PipelineRun('poles', settings, out_dir)
    params = settings.params

    solution = await asyncio.to_thread(solve_bound_states, params)
    record = solution.to_dict()
    record['period'] = solution.period

    try:
        record['perturbative'] = perturbative_solution(params).to_dict()
    except BandEdgeDegeneracyError as e:
        logger.warning(f"Perturbative solution skipped: {e}")
        record['perturbative'] = None

    run.storage.save_json('poles.json', record)

    logger.info(
        f"x1={solution.x1:.9f}, x2={solution.x2:.9f}, phi={solution.phi:.6f}, "
        f"A1={solution.a1:.6f}, A2={solution.a2:.6f}"
    )

    return run.finish()


async def run_landscape(
        settings: RunSettings,
        out_dir: Path,
        field: str,
        values: Sequence[float]
) -> RunManifest:
    """Команда landscape: landscape.csv + landscape.json со списком исключённых значений"""
    run = PipelineRun('landscape', settings, out_dir)

    landscape = await asyncio.to_thread(bound_state_landscape, settings.params, field, values)

    header = settings.record()
    header['field'] = field
    run.storage.save_csv('landscape.csv', landscape.columns(), header=header)
    run.storage.save_json('landscape.json', {
        'field': field,
        'points': len(landscape.values),
        'excluded': landscape.excluded,
    })

    logger.info(f"{len(landscape.values)} of {len(values)} values with bound states")

    return run.finish({'field': field, 'values': list(values)})
