"""
Parameter Sweeps
Файл: utils/sweep.py

Параллельный прогон независимых задач (по N, по значениям параметра).
Задачи выполняются в потоках через asyncio.to_thread, число
одновременных задач ограничено семафором.
"""

import asyncio
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Generic, Optional, Sequence, TypeVar

from utils.errors import DomainError

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')


@dataclass
class SweepResult(Generic[T, R]):
    """
    Итог прогона

    Attributes:
        results: {элемент: результат} для успешных задач, в порядке входа
        failures: {элемент: DomainError} для исключённых задач
    """
    results: Dict[T, R]
    failures: Dict[T, DomainError]


async def gather_sweep(
        func: Callable[[T], R],
        items: Sequence[T],
        max_workers: Optional[int] = None
) -> SweepResult:
    """
    Выполнить func для каждого элемента параллельно

    Args:
        func: Синхронная функция одного элемента
        items: Элементы (хешируемые)
        max_workers: Максимум одновременных задач (по умолчанию из config)

    Returns:
        SweepResult; задачи с DomainError исключаются и логируются,
        любое другое исключение пробрасывается
    """
    from config import config

    if max_workers is None:
        max_workers = config.MAX_WORKERS

    if not items:
        return SweepResult(results={}, failures={})

    semaphore = asyncio.Semaphore(max(1, int(max_workers)))

    async def _run_single(item: T) -> Any:
        async with semaphore:
            return await asyncio.to_thread(func, item)

    tasks = [_run_single(item) for item in items]
    outcomes = await asyncio.gather(*tasks, return_exceptions=True)

    results: Dict[T, R] = {}
    failures: Dict[T, DomainError] = {}

    for item, outcome in zip(items, outcomes):
        if isinstance(outcome, DomainError):
            failures[item] = outcome
            logger.warning(f"Sweep item {item!r} excluded: {outcome}")
        elif isinstance(outcome, BaseException):
            raise outcome
        else:
            results[item] = outcome

    logger.debug(f"Sweep: {len(results)}/{len(items)} items succeeded")

    return SweepResult(results=results, failures=failures)


def run_sweep(
        func: Callable[[T], R],
        items: Sequence[T],
        max_workers: Optional[int] = None
) -> SweepResult:
    """
    Синхронная обёртка над gather_sweep

    Вызывать вне работающего event loop (например, из asyncio.to_thread).
    """
    return asyncio.run(gather_sweep(func, items, max_workers))
