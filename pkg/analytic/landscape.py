"""
Bound-State Landscape
Файл: analytic/landscape.py

Зависимость φ, среднего A1^2 + A2^2 и амплитуды 2 A1 A2 от одного
параметра модели (J, Ω, ω0 или ξ). Точки без связанных состояний
исключаются и логируются.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from analytic.poles import solve_bound_states
from system.model import ModelParams
from utils.errors import ParameterError
from utils.sweep import run_sweep

logger = logging.getLogger(__name__)

LANDSCAPE_FIELDS = ('coupling', 'omega_atom', 'omega_cavity', 'hopping')


@dataclass
class BoundStateLandscape:
    """
    Характеристики связанных состояний вдоль сетки параметра

    Attributes:
        field: Имя изменяемого параметра
        values: Значения, для которых полюса найдены
        x1, x2, a1, a2, phi, mean, amplitude: Массивы той же длины
        excluded: Значения без связанных состояний
    """
    field: str
    values: np.ndarray
    x1: np.ndarray
    x2: np.ndarray
    a1: np.ndarray
    a2: np.ndarray
    phi: np.ndarray
    mean: np.ndarray
    amplitude: np.ndarray
    excluded: List[float] = field(default_factory=list)

    def columns(self) -> Dict[str, np.ndarray]:
        return {
            self.field: self.values,
            'x1': self.x1,
            'x2': self.x2,
            'a1': self.a1,
            'a2': self.a2,
            'phi': self.phi,
            'mean': self.mean,
            'amplitude': self.amplitude,
        }


def bound_state_landscape(
        params: ModelParams,
        field_name: str,
        values: Sequence[float],
        max_workers: Optional[int] = None
) -> BoundStateLandscape:
    """
    Решить полюса для каждого значения параметра

    Args:
        params: Базовые параметры
        field_name: Один из LANDSCAPE_FIELDS
        values: Значения параметра
        max_workers: Параллельных задач (по умолчанию из config)

    Returns:
        BoundStateLandscape, упорядоченный по values
    """
    if field_name not in LANDSCAPE_FIELDS:
        raise ParameterError(
            f"landscape field must be one of {', '.join(LANDSCAPE_FIELDS)}", field="field"
        )

    grid = [float(v) for v in values]
    if not grid:
        raise ParameterError("landscape needs at least one value", field="values")

    sweep = run_sweep(
        lambda value: solve_bound_states(params.with_changes(**{field_name: value})),
        grid,
        max_workers=max_workers,
    )

    kept = [v for v in grid if v in sweep.results]
    solutions = [sweep.results[v] for v in kept]

    if sweep.failures:
        logger.warning(
            f"Landscape over {field_name}: {len(sweep.failures)} of {len(grid)} values "
            f"have no bound states"
        )

    def _collect(attribute: str) -> np.ndarray:
        return np.array([getattr(s, attribute) for s in solutions], dtype=float)

    return BoundStateLandscape(
        field=field_name,
        values=np.array(kept, dtype=float),
        x1=_collect('x1'),
        x2=_collect('x2'),
        a1=_collect('a1'),
        a2=_collect('a2'),
        phi=_collect('phi'),
        mean=_collect('mean'),
        amplitude=_collect('amplitude'),
        excluded=sorted(sweep.failures),
    )
