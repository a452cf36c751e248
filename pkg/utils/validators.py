"""
Data Validators
Файл: utils/validators.py

Валидация временных сеток, интервалов и списков чисел из CLI
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from utils.errors import NonUniformGridError, ParameterError

logger = logging.getLogger(__name__)


def validate_time_grid(
        times: Sequence[float],
        allow_negative: bool = False,
        min_length: int = 1
) -> np.ndarray:
    """
    Валидация сетки по времени

    Args:
        times: Моменты времени (единицы 1/ξ)
        allow_negative: Разрешить отрицательные времена
        min_length: Минимальное число точек

    Returns:
        1D float массив

    Raises:
        ParameterError: пустая / не строго возрастающая / отрицательная сетка
    """
    grid = np.atleast_1d(np.asarray(times, dtype=float))

    if grid.ndim != 1:
        raise ParameterError("time grid must be one-dimensional", field="times")

    if grid.size < min_length:
        raise ParameterError(
            f"time grid needs at least {min_length} points (got {grid.size})",
            field="times"
        )

    if not np.all(np.isfinite(grid)):
        raise ParameterError("time grid contains non-finite values", field="times")

    if grid.size > 1 and np.any(np.diff(grid) <= 0):
        raise ParameterError("times must be strictly increasing", field="times")

    if not allow_negative and grid.size and grid[0] < 0:
        raise ParameterError("times must be non-negative", field="times")

    return grid


def grid_spacing(times: np.ndarray, rtol: Optional[float] = None) -> float:
    """
    Шаг равномерной сетки

    Args:
        times: Строго возрастающая сетка
        rtol: Допустимое относительное отклонение шага (по умолчанию из config)

    Returns:
        Шаг dt

    Raises:
        NonUniformGridError: шаг непостоянен
    """
    from config import config

    if rtol is None:
        rtol = config.GRID_UNIFORM_RTOL

    if len(times) < 2:
        raise NonUniformGridError("grid spacing needs at least two samples")

    steps = np.diff(times)
    dt = float(np.median(steps))

    if dt <= 0 or np.max(np.abs(steps - dt)) > rtol * dt:
        raise NonUniformGridError(
            f"time grid is not uniform (dt spread {np.ptp(steps):.3e})"
        )

    return dt


def uniform_grid(t_start: float, t_end: float, dt: float) -> np.ndarray:
    """
    Равномерная сетка t_start, t_start+dt, ..., не превышающая t_end

    Args:
        t_start: Начало
        t_end: Конец (включительно, если попадает на шаг)
        dt: Шаг

    Returns:
        Массив времён
    """
    if dt <= 0:
        raise ParameterError("dt must be positive", field="dt")
    if t_end < t_start:
        raise ParameterError("t_end must not precede t_start", field="t_end")

    steps = int(np.floor((t_end - t_start) / dt + 1e-9))
    return t_start + dt * np.arange(steps + 1)


def validate_window(
        window: Tuple[float, float],
        field: str = "window"
) -> Tuple[float, float]:
    """
    Проверка интервала (start, end)

    Returns:
        Кортеж (start, end) как float
    """
    try:
        start, end = float(window[0]), float(window[1])
    except (TypeError, ValueError, IndexError):
        raise ParameterError(f"{field} must be a pair of numbers", field=field)

    if not end > start:
        raise ParameterError(f"{field} end must exceed start", field=field)

    return start, end


def parse_number_list(text: str, integer: bool = False) -> List[float]:
    """
    Разобрать список чисел из строки CLI

    Поддерживаются формы "5,6,7", "5-10" (только целые) и
    "start:stop:num" (равномерно, включая концы).

    Args:
        text: Строка
        integer: Приводить к int

    Returns:
        Список чисел
    """
    text = text.strip()

    try:
        if ':' in text:
            start, stop, num = text.split(':')
            values = np.linspace(float(start), float(stop), int(num)).tolist()
        elif integer and '-' in text and ',' not in text:
            first, last = text.split('-')
            values = list(range(int(first), int(last) + 1))
        else:
            values = [float(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise ParameterError(f"cannot parse number list '{text}'")

    if not values:
        raise ParameterError(f"empty number list '{text}'")

    if integer:
        if any(float(v) != int(v) for v in values):
            raise ParameterError(f"expected integers in '{text}'")
        return [int(v) for v in values]

    return values
