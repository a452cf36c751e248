"""
Bound-State Poles
Файл: analytic/poles.py

Полюса резольвенты вне зоны: x1 > ω0 + 2ξ и x2 < ω0 - 2ξ, их вычеты
A1, A2 и частота биений φ = x1 - x2.

Функции полюсов в x-пространстве:
    верхняя  f1(x) = x - Ω - J^2 / √D(x),   x > ω0 + 2ξ
    нижняя   f2(x) = x - Ω + J^2 / √D(x),   x < ω0 - 2ξ
где D(x) = (x - ω0 - 2ξ)(x - ω0 + 2ξ) = (x - ω0)^2 - 4ξ^2.

Корни ищутся по отступу от края зоны u > 0, в котором обе ветви
записываются одинаково: g(u) = c + u - J^2 / √(u(u + 4ξ)),
c = ω0 + 2ξ - Ω для верхней ветви и c = Ω - ω0 + 2ξ для нижней.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy import optimize

from system.model import ModelParams, band_edges, validate
from utils.errors import DomainError, PoleNotFoundError

logger = logging.getLogger(__name__)

UPPER = 'upper'
LOWER = 'lower'


@dataclass
class BoundStateSolution:
    """
    Связанные состояния бесконечной решётки

    Attributes:
        x1: Верхний полюс (над зоной)
        x2: Нижний полюс (под зоной)
        binding_upper: x1 - (ω0 + 2ξ)
        binding_lower: (ω0 - 2ξ) - x2
        residual_upper: |f1(x1)|
        residual_lower: |f2(x2)|
        a1: Вес верхнего полюса A1 (None, пока не вычислен)
        a2: Вес нижнего полюса A2
        params: Параметры модели
    """
    x1: float
    x2: float
    binding_upper: float
    binding_lower: float
    residual_upper: float
    residual_lower: float
    a1: Optional[float] = None
    a2: Optional[float] = None
    params: Optional[ModelParams] = None

    @property
    def phi(self) -> float:
        """Частота регулярных осцилляций φ = x1 - x2"""
        return self.x1 - self.x2

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.phi

    @property
    def has_weights(self) -> bool:
        return self.a1 is not None and self.a2 is not None

    @property
    def mean(self) -> float:
        """Среднее долговременной населённости A1^2 + A2^2"""
        self._require_weights()
        return self.a1 ** 2 + self.a2 ** 2

    @property
    def amplitude(self) -> float:
        """Амплитуда долговременных осцилляций 2 A1 A2"""
        self._require_weights()
        return 2.0 * self.a1 * self.a2

    def _require_weights(self) -> None:
        if not self.has_weights:
            raise DomainError("residue weights are not computed for this solution")

    def to_dict(self) -> Dict[str, Any]:
        record = {
            'x1': self.x1,
            'x2': self.x2,
            'a1': self.a1,
            'a2': self.a2,
            'phi': self.phi,
            'binding_upper': self.binding_upper,
            'binding_lower': self.binding_lower,
            'residual_upper': self.residual_upper,
            'residual_lower': self.residual_lower,
        }
        if self.params is not None:
            record['params'] = self.params.to_dict()
        return record


def _edge_product(params: ModelParams, x):
    """D(x) = (x - ω0 - 2ξ)(x - ω0 + 2ξ)"""
    y = np.asarray(x, dtype=float) - params.omega_cavity
    return (y - 2.0 * params.hopping) * (y + 2.0 * params.hopping)


def _check_branch(params: ModelParams, x, branch: str) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    lower, upper = band_edges(params)

    if branch == UPPER and np.any(x <= upper):
        raise DomainError(f"upper pole function needs x > {upper} (band edge)")
    if branch == LOWER and np.any(x >= lower):
        raise DomainError(f"lower pole function needs x < {lower} (band edge)")

    return x


def self_energy(params: ModelParams, x):
    """
    Собственная энергия атома вне зоны

    Σ(x) = +J^2/√D(x) над зоной, -J^2/√D(x) под зоной

    Raises:
        DomainError: x внутри зоны или на её краю
    """
    x = np.asarray(x, dtype=float)
    lower, upper = band_edges(params)

    if np.any((x >= lower) & (x <= upper)):
        raise DomainError("self-energy is defined here only outside the band")

    sign = np.where(x > upper, 1.0, -1.0)
    return sign * params.coupling ** 2 / np.sqrt(_edge_product(params, x))


def self_energy_derivative(params: ModelParams, x):
    """dΣ/dx = -J^2 (x - ω0) / |D(x)|^{3/2} вне зоны (одна формула для обеих ветвей)"""
    x = np.asarray(x, dtype=float)
    self_energy(params, x)
    y = x - params.omega_cavity
    return -params.coupling ** 2 * np.abs(y) / _edge_product(params, x) ** 1.5


def pole_function_upper(params: ModelParams, x):
    """
    Невязка f1(x) = x - Ω - J^2/√D(x); ноль в верхнем полюсе

    Raises:
        DomainError: x не выше зоны
    """
    x = _check_branch(params, x, UPPER)
    return x - params.omega_atom - params.coupling ** 2 / np.sqrt(_edge_product(params, x))


def pole_function_lower(params: ModelParams, x):
    """
    Невязка f2(x) = x - Ω + J^2/√D(x); ноль в нижнем полюсе

    Raises:
        DomainError: x не ниже зоны
    """
    x = _check_branch(params, x, LOWER)
    return x - params.omega_atom + params.coupling ** 2 / np.sqrt(_edge_product(params, x))


def _branch_constant(params: ModelParams, branch: str) -> float:
    if branch == UPPER:
        return params.omega_cavity + 2.0 * params.hopping - params.omega_atom
    return params.omega_atom - params.omega_cavity + 2.0 * params.hopping


def _offset_residual(params: ModelParams, u: float, branch: str) -> float:
    """g(u) = c + u - J^2/√(u(u + 4ξ)), возрастает по u"""
    d = u * (u + 4.0 * params.hopping)
    return _branch_constant(params, branch) + u - params.coupling ** 2 / math.sqrt(d)


def _offset_slope(params: ModelParams, u: float) -> float:
    d = u * (u + 4.0 * params.hopping)
    return 1.0 + params.coupling ** 2 * (u + 2.0 * params.hopping) / d ** 1.5


def _seed_bracket(
        params: ModelParams,
        branch: str,
        inner: float,
        outer: float
) -> Tuple[float, float]:
    """Сузить скобку вокруг теоретико-возмущенческой оценки u ≈ J^4 / (4ξ c^2)"""
    c = _branch_constant(params, branch)
    if c <= 0 or params.coupling == 0:
        return inner, outer

    seed = params.coupling ** 4 / (4.0 * params.hopping * c ** 2)
    low, high = max(inner, seed / 4.0), min(outer, seed * 4.0)

    if low < high and _offset_residual(params, low, branch) < 0 < _offset_residual(params, high, branch):
        return low, high

    return inner, outer


def _solve_branch(params: ModelParams, branch: str) -> Tuple[float, float]:
    """
    Найти отступ полюса от края зоны

    Returns:
        (u, |g(u)|)

    Raises:
        PoleNotFoundError: в [ε, Λ] нет смены знака
    """
    from config import config

    inner = config.POLE_EDGE_OFFSET * params.hopping
    if params.coupling > 0 and abs(params.detuning) < 2.0 * params.hopping:
        # Ω в зоне: u ≈ J^4 / (4ξ c^2) может быть меньше POLE_EDGE_OFFSET
        c = _branch_constant(params, branch)
        inner = min(inner, params.coupling ** 4 / (400.0 * params.hopping * c ** 2))

    outer = max(
        10.0 * params.hopping,
        2.0 * abs(params.detuning) + 10.0 * params.hopping
    )

    g_inner = _offset_residual(params, inner, branch)
    g_outer = _offset_residual(params, outer, branch)

    if not (g_inner < 0 < g_outer):
        raise PoleNotFoundError(
            branch,
            f"pole not found: no sign change of the {branch} pole function "
            f"within offsets [{inner:.1e}, {outer:.1f}] from the band edge"
        )

    low, high = _seed_bracket(params, branch, inner, outer)

    u = optimize.brentq(
        lambda v: _offset_residual(params, v, branch),
        low, high,
        xtol=min(config.POLE_XTOL * params.hopping, 1e-6 * low),
        rtol=4 * np.finfo(float).eps,
        maxiter=500
    )

    # Newton polish
    residual = abs(_offset_residual(params, u, branch))
    for _ in range(config.POLE_NEWTON_STEPS):
        candidate = u - _offset_residual(params, u, branch) / _offset_slope(params, u)
        if candidate <= 0:
            break
        candidate_residual = abs(_offset_residual(params, candidate, branch))
        if candidate_residual >= residual:
            break
        u, residual = candidate, candidate_residual

    if residual > config.POLE_RESIDUAL_TOL * params.hopping:
        logger.warning(f"{branch} pole residual {residual:.2e} above tolerance")

    logger.debug(f"{branch} pole: offset {u:.12e}, residual {residual:.2e}")

    return u, residual


def find_poles(params: ModelParams) -> BoundStateSolution:
    """
    Найти оба полюса связанных состояний

    Args:
        params: ModelParams с J > 0

    Returns:
        BoundStateSolution без весов (a1, a2 = None)

    Raises:
        PoleNotFoundError: одна из скобок без смены знака (или J = 0)
    """
    validate(params)

    if params.coupling <= 0:
        raise PoleNotFoundError('both', "pole not found: bound states need J > 0")

    u1, residual_upper = _solve_branch(params, UPPER)
    u2, residual_lower = _solve_branch(params, LOWER)

    lower_edge, upper_edge = band_edges(params)

    return BoundStateSolution(
        x1=upper_edge + u1,
        x2=lower_edge - u2,
        binding_upper=u1,
        binding_lower=u2,
        residual_upper=residual_upper,
        residual_lower=residual_lower,
        params=params,
    )


def residue_weights(params: ModelParams, poles: BoundStateSolution) -> Tuple[float, float]:
    """
    Вычеты полюсов A_j = D / (D + (x_j - Ω)(x_j - ω0))

    Совпадают с 1 / (1 - Σ'(x_j)) и с dx_j/dΩ; оба лежат в (0, 1).

    Args:
        params: ModelParams
        poles: Результат find_poles

    Returns:
        (A1, A2)
    """
    weights = []
    for branch, u in ((UPPER, poles.binding_upper), (LOWER, poles.binding_lower)):
        d = u * (u + 4.0 * params.hopping)
        cross = (_branch_constant(params, branch) + u) * (2.0 * params.hopping + u)
        weights.append(d / (d + cross))

    return weights[0], weights[1]


def solve_bound_states(params: ModelParams) -> BoundStateSolution:
    """Полюса и их вычеты за один вызов"""
    solution = find_poles(params)
    solution.a1, solution.a2 = residue_weights(params, solution)

    logger.debug(
        f"Bound states: x1={solution.x1:.6f}, x2={solution.x2:.6f}, "
        f"A1={solution.a1:.6f}, A2={solution.a2:.6f}, phi={solution.phi:.6f}"
    )

    return solution
