from __future__ import annotations

import asyncio

import pytest

from utils.errors import NoRegularWindowError
from utils.sweep import gather_sweep, run_sweep


def _square_or_fail(value: int) -> int:
    if value == 3:
        raise NoRegularWindowError("no window")
    return value * value


def test_results_follow_input_order():
    result = run_sweep(lambda v: v * 10, [5, 1, 4], max_workers=2)

    assert list(result.results) == [5, 1, 4]
    assert result.results == {5: 50, 1: 10, 4: 40}
    assert result.failures == {}


def test_domain_errors_are_excluded():
    result = run_sweep(_square_or_fail, [1, 2, 3, 4])

    assert result.results == {1: 1, 2: 4, 4: 16}
    assert list(result.failures) == [3]
    assert isinstance(result.failures[3], NoRegularWindowError)


def test_other_errors_propagate():
    def _broken(value: int) -> int:
        raise RuntimeError("boom")

    with pytest.raises(RuntimeError, match="boom"):
        run_sweep(_broken, [1])


def test_empty_sweep():
    result = asyncio.run(gather_sweep(lambda v: v, []))

    assert result.results == {} and result.failures == {}
