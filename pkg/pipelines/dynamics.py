"""
Dynamics Pipeline
Файл: pipelines/dynamics.py

Ряд P_e(t) точной эволюции; с analytic=True добавляются колонки
долговременного закона и полной аналитической амплитуды.
"""

import asyncio
import logging
from pathlib import Path

import numpy as np

from analytic.branch_cut import alpha_analytic, pe_longtime
from analytic.poles import solve_bound_states
from pipelines.common import PipelineRun, RunSettings
from system.dynamics import evolve
from utils.result_storage import RunManifest
from utils.validators import uniform_grid

logger = logging.getLogger(__name__)


async def run_dynamics(settings: RunSettings, out_dir: Path, analytic: bool = False) -> RunManifest:
    """
    Команда dynamics: dynamics.csv (t, pe[, pe_longtime, pe_analytic])

    Args:
        settings: RunSettings
        out_dir: Директория результатов
        analytic: Добавить аналитические колонки

    Returns:
        RunManifest
    """
    run = PipelineRun('dynamics', settings, out_dir)
    params = settings.params

    grid = uniform_grid(0.0, settings.t_max, settings.dt)
    logger.info(f"Evolving {len(grid)} time points up to t={grid[-1]:.2f}...")

    series = await asyncio.to_thread(evolve, params, grid)
    columns = {'t': series.times, 'pe': series.values}

    if analytic:
        logger.info("Evaluating bound-state solution and branch cut...")
        solution = await asyncio.to_thread(solve_bound_states, params)
        columns['pe_longtime'] = pe_longtime(params, grid, solution)
        alpha = await asyncio.to_thread(alpha_analytic, params, grid, solution)
        columns['pe_analytic'] = np.abs(alpha) ** 2

    run.storage.save_csv('dynamics.csv', columns, header=settings.record())

    logger.info(
        f"P_e range [{series.values.min():.6f}, {series.values.max():.6f}], "
        f"final {series.values[-1]:.6f}"
    )

    return run.finish({'analytic': analytic})
