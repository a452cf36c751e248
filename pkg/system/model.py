"""
Atom + Coupled Cavity Array Model
Файл: system/model.py

Физические параметры, закон дисперсии кольца резонаторов, валидация и
отображение базиса N-кубитного регистра на одновозбуждённый базис
(атом + n = 2^N - 1 резонаторов). Все частоты в единицах ξ, времена в 1/ξ.
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from utils.errors import ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModelParams:
    """
    Параметры одного эксперимента

    Attributes:
        omega_atom: Частота перехода атома Ω
        omega_cavity: Частота резонаторов ω0
        coupling: Связь атом-резонатор J
        cavities: Число резонаторов n (нечётное)
        hopping: Туннелирование фотона ξ (внутренняя единица, по умолчанию 1)
    """
    omega_atom: float
    omega_cavity: float
    coupling: float
    cavities: int
    hopping: float = 1.0

    @classmethod
    def from_qubits(
            cls,
            qubits: int,
            omega_atom: float,
            omega_cavity: float,
            coupling: float,
            hopping: float = 1.0
    ) -> 'ModelParams':
        """Параметры для регистра из N кубитов: n = 2^N - 1"""
        if qubits < 1:
            raise ParameterError("qubit count must be positive", field="qubits")
        return cls(
            omega_atom=float(omega_atom),
            omega_cavity=float(omega_cavity),
            coupling=float(coupling),
            cavities=2 ** int(qubits) - 1,
            hopping=float(hopping),
        )

    @property
    def j_max(self) -> int:
        """j_M = (n - 1) / 2"""
        return (self.cavities - 1) // 2

    @property
    def detuning(self) -> float:
        """Δ = Ω - ω0"""
        return self.omega_atom - self.omega_cavity

    @property
    def dimension(self) -> int:
        return self.cavities + 1

    @property
    def qubits(self) -> Optional[int]:
        """N, если n + 1 - степень двойки"""
        size = self.cavities + 1
        if size & (size - 1) == 0:
            return size.bit_length() - 1
        return None

    def with_changes(self, **changes: Any) -> 'ModelParams':
        return replace(self, **changes)

    def with_qubits(self, qubits: int) -> 'ModelParams':
        if qubits < 1:
            raise ParameterError("qubit count must be positive", field="qubits")
        return replace(self, cavities=2 ** int(qubits) - 1)

    def to_dict(self) -> Dict[str, Any]:
        record = {
            'omega_atom': self.omega_atom,
            'omega_cavity': self.omega_cavity,
            'xi': self.hopping,
            'coupling_j': self.coupling,
            'cavities': self.cavities,
        }
        if self.qubits is not None:
            record['qubits'] = self.qubits
        return record


def validate(params: ModelParams) -> ModelParams:
    """
    Проверить инварианты параметров

    Args:
        params: ModelParams

    Returns:
        params без изменений

    Raises:
        ParameterError: с указанием нарушенного инварианта
    """
    n = params.cavities

    if isinstance(n, bool) or int(n) != n:
        raise ParameterError("n must be an integer", field="cavities")
    if n < 1:
        raise ParameterError("n must be positive", field="cavities")
    if n % 2 == 0:
        raise ParameterError("n must be odd", field="cavities")

    for name in ('omega_atom', 'omega_cavity', 'coupling', 'hopping'):
        if not math.isfinite(getattr(params, name)):
            raise ParameterError(f"{name} must be finite", field=name)

    if params.hopping <= 0:
        raise ParameterError("hopping must be positive", field="hopping")
    if params.coupling < 0:
        raise ParameterError("coupling must be non-negative", field="coupling")

    return params


def dispersion(params: ModelParams, k):
    """
    Закон дисперсии кольца: ω_k = ω0 - 2ξ cos(k)

    Args:
        params: ModelParams
        k: Волновое число (скаляр или массив)

    Returns:
        Частота той же формы, что k
    """
    return params.omega_cavity - 2.0 * params.hopping * np.cos(k)


def band_edges(params: ModelParams) -> Tuple[float, float]:
    """Границы зоны (ω0 - 2ξ, ω0 + 2ξ)"""
    return (
        params.omega_cavity - 2.0 * params.hopping,
        params.omega_cavity + 2.0 * params.hopping,
    )


def k_coupling(params: ModelParams) -> float:
    """Связь атома с каждой модой: J_k = J / √n"""
    return params.coupling / math.sqrt(params.cavities)


def ring_wavenumbers(params: ModelParams) -> np.ndarray:
    """Разрешённые k = 2πm/n, m = 0..n-1, приведённые в (-π, π]"""
    m = np.arange(params.cavities)
    k = 2.0 * np.pi * m / params.cavities
    return np.where(k > np.pi, k - 2.0 * np.pi, k)


@dataclass(frozen=True)
class BasisMap:
    """
    Отображение базиса регистра на одновозбуждённый базис

    Индекс 0 - возбуждённый атом, все резонаторы в вакууме.
    Индекс j (1..n) - фотон в резонаторе с позицией j - 1 - j_M,
    позиции идут по возрастанию от -j_M до j_M.

    Attributes:
        qubits: Число кубитов N
    """
    qubits: int

    @property
    def size(self) -> int:
        return 2 ** self.qubits

    @property
    def cavities(self) -> int:
        return self.size - 1

    @property
    def j_max(self) -> int:
        return (self.cavities - 1) // 2

    def _check_index(self, index: int) -> None:
        if not 0 <= index < self.size:
            raise ParameterError(
                f"basis index {index} outside 0..{self.size - 1}", field="index"
            )

    def position(self, index: int) -> Optional[int]:
        """Позиция фотона для индекса (None для атома)"""
        self._check_index(index)
        if index == 0:
            return None
        return index - 1 - self.j_max

    def index_of(self, position: Optional[int]) -> int:
        """Обратное отображение: позиция (None - атом) -> индекс"""
        if position is None:
            return 0
        if not -self.j_max <= position <= self.j_max:
            raise ParameterError(
                f"position {position} outside -{self.j_max}..{self.j_max}", field="position"
            )
        return position + self.j_max + 1

    def label(self, index: int) -> str:
        position = self.position(index)
        return "atom" if position is None else f"cavity[{position}]"

    def bitstring(self, index: int) -> str:
        """Состояние регистра, например '00' для индекса 0 при N=2"""
        self._check_index(index)
        return format(index, f'0{self.qubits}b')

    def labels(self) -> List[str]:
        return [self.label(i) for i in range(self.size)]


def basis_map(qubits: int) -> BasisMap:
    """
    Построить BasisMap для N кубитов

    Args:
        qubits: N >= 1

    Returns:
        BasisMap размера 2^N
    """
    if isinstance(qubits, bool) or int(qubits) != qubits or qubits <= 0:
        raise ParameterError("qubit count must be a positive integer", field="qubits")
    return BasisMap(qubits=int(qubits))
