from __future__ import annotations

import numpy as np
import pytest

from metrology.fisher import fisher_information
from utils.errors import DegeneratePopulationError


def test_scalar_values():
    assert fisher_information(0.5, 0.5) == pytest.approx(1.0)
    assert fisher_information(0.3, 0.0) == 0.0
    assert isinstance(fisher_information(0.2, 0.1), float)


def test_array_values():
    pe = np.array([0.1, 0.5, 0.9])
    dpe = np.array([0.3, 1.0, 0.3])

    np.testing.assert_allclose(fisher_information(pe, dpe), [1.0, 4.0, 1.0])


@pytest.mark.parametrize("pe", [0.0, 1.0, 1.0 - 1e-14, 1e-13])
def test_degenerate_population(pe):
    with pytest.raises(DegeneratePopulationError):
        fisher_information(pe, 0.1)


def test_custom_tolerance():
    assert fisher_information(0.995, 0.1, tol=1e-3) > 0
    with pytest.raises(DegeneratePopulationError):
        fisher_information(0.995, 0.1, tol=1e-2)
