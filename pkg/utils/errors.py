"""
Error Hierarchy
Файл: utils/errors.py

Исключения симулятора. Каждый класс несёт exit_code, который main.py
возвращает из командной строки:
    2 - некорректные параметры / использование
    3 - ошибка области (нет полюса, вырожденная населённость, нет окна)
    4 - численный сбой (диагонализация, квадратура, неравномерная сетка)
"""

from typing import Optional


class BoundStateError(Exception):
    """Базовое исключение симулятора"""
    exit_code = 1


# ============================================================================
# PARAMETERS (exit 2)
# ============================================================================

class ParameterError(BoundStateError, ValueError):
    """Нарушен инвариант параметров модели или аргументов"""
    exit_code = 2

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


# ============================================================================
# DOMAIN (exit 3)
# ============================================================================

class DomainError(BoundStateError):
    """Запрос вне области применимости формулы"""
    exit_code = 3


class PoleNotFoundError(DomainError):
    """В скобке нет смены знака функции полюса"""

    def __init__(self, branch: str, message: Optional[str] = None):
        super().__init__(message or f"pole not found ({branch} branch)")
        self.branch = branch


class DegeneratePopulationError(DomainError):
    """P_e в {0, 1}: информация Фишера не определена"""


class BandEdgeDegeneracyError(DomainError):
    """Ω совпадает с краем зоны ω0 ± 2ξ"""


class SingularPointError(DomainError):
    """Неопределённость расходится или отрицательна в данной точке"""


class NoRegularWindowError(DomainError):
    """В ряду нет окна регулярных осцилляций"""


class InsufficientDataError(DomainError):
    """Недостаточно точек для анализа или фита"""


# ============================================================================
# NUMERICAL (exit 4)
# ============================================================================

class NumericalError(BoundStateError):
    """Численный сбой"""
    exit_code = 4


class DiagonalizationError(NumericalError):
    """Ошибка диагонализации гамильтониана"""


class QuadratureConvergenceError(NumericalError):
    """Квадратура не сошлась при максимальном порядке"""


class NonUniformGridError(NumericalError):
    """Сетка по времени неравномерна"""
