"""
Weak-Coupling Perturbative Solution
Файл: analytic/perturbative.py

Разложение полюсов по J^4 от краёв зоны:
    x1 = ω0 + 2ξ + C1 J^4,   x2 = ω0 - 2ξ + C2 J^4,
    C1 = 1 / (4ξ Ω+^2),      C2 = -1 / (4ξ Ω-^2),
    A1 = J^4 / (2 Ω+^3 ξ),   A2 = -J^4 / (2 Ω-^3 ξ),
    φ = 4ξ + (C1 - C2) J^4,  Ω± = ±2ξ + ω0 - Ω.

Неопределённость частоты в этом приближении:
    δΩ^2 = t ξ^2 B1 B2 / (J^8 T B3).
Формулы вычисляются как есть, без ограничения области применимости;
при сильной связи B1 < 0 и точки считаются сингулярными.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from system.model import ModelParams, validate
from utils.errors import BandEdgeDegeneracyError, ParameterError, SingularPointError

logger = logging.getLogger(__name__)

# |Ω±| ниже этого порога (в единицах ξ) считается вырождением с краем зоны
EDGE_DEGENERACY_TOL = 1e-12


@dataclass(frozen=True)
class PerturbativeSolution:
    """
    Полюса и веса первого порядка

    Attributes:
        x01: ω0 + 2ξ
        x02: ω0 - 2ξ
        c1: Коэффициент сдвига верхнего полюса
        c2: Коэффициент сдвига нижнего полюса
        a1: Вес A1
        a2: Вес A2
        phi: Частота φ
        omega_plus: Ω+ = 2ξ + ω0 - Ω
        omega_minus: Ω- = -2ξ + ω0 - Ω
        coupling: J
    """
    x01: float
    x02: float
    c1: float
    c2: float
    a1: float
    a2: float
    phi: float
    omega_plus: float
    omega_minus: float
    coupling: float

    @property
    def x1(self) -> float:
        return self.x01 + self.c1 * self.coupling ** 4

    @property
    def x2(self) -> float:
        return self.x02 + self.c2 * self.coupling ** 4

    def to_dict(self) -> Dict[str, Any]:
        return {
            'x1': self.x1,
            'x2': self.x2,
            'c1': self.c1,
            'c2': self.c2,
            'a1': self.a1,
            'a2': self.a2,
            'phi': self.phi,
        }


@dataclass
class PerturbativeTerms:
    """Множители B1, B2, B3 на сетке времени"""
    times: np.ndarray
    b1: np.ndarray
    b2: np.ndarray
    b3: np.ndarray


def perturbative_solution(params: ModelParams) -> PerturbativeSolution:
    """
    Решение первого порядка по J^4

    Args:
        params: ModelParams

    Returns:
        PerturbativeSolution

    Raises:
        BandEdgeDegeneracyError: Ω = ω0 ± 2ξ
    """
    validate(params)

    xi = params.hopping
    base = params.omega_cavity - params.omega_atom
    omega_plus = 2.0 * xi + base
    omega_minus = -2.0 * xi + base

    if abs(omega_plus) < EDGE_DEGENERACY_TOL * xi or abs(omega_minus) < EDGE_DEGENERACY_TOL * xi:
        raise BandEdgeDegeneracyError(
            f"atomic frequency {params.omega_atom} sits on a band edge "
            f"(Ω+={omega_plus:.3g}, Ω-={omega_minus:.3g})"
        )

    j4 = params.coupling ** 4
    c1 = 1.0 / (4.0 * xi * omega_plus ** 2)
    c2 = -1.0 / (4.0 * xi * omega_minus ** 2)

    return PerturbativeSolution(
        x01=params.omega_cavity + 2.0 * xi,
        x02=params.omega_cavity - 2.0 * xi,
        c1=c1,
        c2=c2,
        a1=j4 / (2.0 * omega_plus ** 3 * xi),
        a2=-j4 / (2.0 * omega_minus ** 3 * xi),
        phi=4.0 * xi + (c1 - c2) * j4,
        omega_plus=omega_plus,
        omega_minus=omega_minus,
        coupling=params.coupling,
    )


def perturbative_population(params: ModelParams, t) -> np.ndarray:
    """P_e = A1^2 + A2^2 + 2 A1 A2 cos(φ t) с весами первого порядка"""
    s = perturbative_solution(params)
    t = np.asarray(t, dtype=float)
    return s.a1 ** 2 + s.a2 ** 2 + 2.0 * s.a1 * s.a2 * np.cos(s.phi * t)


def perturbative_terms(params: ModelParams, t) -> PerturbativeTerms:
    """
    B1, B2, B3 формулы неопределённости

    Args:
        params: ModelParams
        t: Моменты времени

    Returns:
        PerturbativeTerms
    """
    s = perturbative_solution(params)
    t = np.atleast_1d(np.asarray(t, dtype=float))

    xi = params.hopping
    j8 = params.coupling ** 8
    op, om = s.omega_plus, s.omega_minus
    detuning = params.detuning
    cos_t = np.cos(s.phi * t)
    sin_t = np.sin(s.phi * t)

    b1 = (
        -j8 / (4.0 * om ** 6 * xi ** 2)
        - j8 / (4.0 * op ** 6 * xi ** 2)
        + j8 * cos_t / (2.0 * om ** 3 * op ** 3 * xi ** 2)
        + 1.0
    )
    b2 = 1.0 / om ** 6 + 1.0 / op ** 6 - 2.0 * cos_t / (om ** 3 * op ** 3)
    sqrt_b3 = (
        params.coupling ** 4 * t * detuning * (12.0 * xi ** 2 + detuning ** 2) * sin_t
        / (xi * om ** 6 * op ** 6)
        - 3.0 / om ** 7
        - 3.0 / op ** 7
        + 3.0 * cos_t / (om ** 4 * op ** 3)
        + 3.0 * cos_t / (om ** 3 * op ** 4)
    )

    return PerturbativeTerms(times=t, b1=b1, b2=b2, b3=sqrt_b3 ** 2)


def perturbative_variance(params: ModelParams, t, t_total: float) -> np.ndarray:
    """
    δΩ^2 = t ξ^2 B1 B2 / (J^8 T B3) без отбраковки

    Точки с B3 = 0 получают inf, отрицательные значения сохраняются.
    """
    if t_total <= 0:
        raise ParameterError("total duration must be positive", field="t_total")
    if params.coupling <= 0:
        raise ParameterError("perturbative uncertainty needs J > 0", field="coupling")

    terms = perturbative_terms(params, t)
    numerator = terms.times * params.hopping ** 2 * terms.b1 * terms.b2
    denominator = params.coupling ** 8 * t_total * terms.b3

    with np.errstate(divide='ignore', invalid='ignore'):
        variance = numerator / denominator

    return np.where(terms.b3 == 0, np.inf, variance)


def perturbative_uncertainty(params: ModelParams, t: float, t_total: float) -> float:
    """
    δΩ в момент t по формуле первого порядка

    Args:
        params: ModelParams
        t: Время кодирования, 0 < t <= t_total
        t_total: Полная длительность эксперимента T

    Returns:
        δΩ

    Raises:
        BandEdgeDegeneracyError: Ω на краю зоны
        SingularPointError: B3 = 0 или δΩ^2 < 0
    """
    if not 0 < t <= t_total:
        raise ParameterError(f"encoding time must lie in (0, {t_total}]", field="t")

    variance = float(perturbative_variance(params, [t], t_total)[0])

    if not math.isfinite(variance) or variance <= 0:
        raise SingularPointError(
            f"perturbative uncertainty is singular at t={t:.6g} (δΩ^2={variance:.3g})"
        )

    return math.sqrt(variance)
