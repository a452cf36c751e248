"""
Fisher Information
Файл: metrology/fisher.py

Информация Фишера измерения населённости возбуждённого уровня:
F = (∂P_e/∂Ω)^2 / (P_e (1 - P_e))
"""

from typing import Optional

import numpy as np

from utils.errors import DegeneratePopulationError


def fisher_information(pe, dpe_domega, tol: Optional[float] = None):
    """
    Args:
        pe: P_e (скаляр или массив)
        dpe_domega: ∂P_e/∂Ω той же формы
        tol: Граница вырождения: P_e <= tol или P_e >= 1 - tol (по умолчанию из config)

    Returns:
        F (float для скалярного входа, иначе массив)

    Raises:
        DegeneratePopulationError: P_e вне (tol, 1 - tol)
    """
    from config import config

    tol = config.POPULATION_TOL if tol is None else tol

    p = np.asarray(pe, dtype=float)
    d = np.asarray(dpe_domega, dtype=float)

    degenerate = (p <= tol) | (p >= 1.0 - tol)
    if np.any(degenerate):
        raise DegeneratePopulationError(
            f"population {float(np.atleast_1d(p)[np.atleast_1d(degenerate)][0]):.6g} "
            f"is degenerate, Fisher information undefined"
        )

    information = d ** 2 / (p * (1.0 - p))
    return float(information) if information.ndim == 0 else information
