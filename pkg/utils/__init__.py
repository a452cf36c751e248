"""
Utils Package
Файл: utils/__init__.py

Утилиты симулятора: ошибки, логирование, валидация, хранение результатов,
параллельные прогоны
"""

from .logger import setup_logger
from .errors import (
    BoundStateError,
    ParameterError,
    DomainError,
    PoleNotFoundError,
    DegeneratePopulationError,
    BandEdgeDegeneracyError,
    SingularPointError,
    NoRegularWindowError,
    InsufficientDataError,
    NumericalError,
    DiagonalizationError,
    QuadratureConvergenceError,
    NonUniformGridError
)
from .validators import (
    validate_time_grid,
    grid_spacing,
    uniform_grid,
    validate_window,
    parse_number_list
)
from .result_storage import ResultStorage, RunManifest, read_csv, atomic_write_text
from .sweep import SweepResult, gather_sweep, run_sweep

__all__ = [
    # Logger
    'setup_logger',

    # Errors
    'BoundStateError',
    'ParameterError',
    'DomainError',
    'PoleNotFoundError',
    'DegeneratePopulationError',
    'BandEdgeDegeneracyError',
    'SingularPointError',
    'NoRegularWindowError',
    'InsufficientDataError',
    'NumericalError',
    'DiagonalizationError',
    'QuadratureConvergenceError',
    'NonUniformGridError',

    # Validators
    'validate_time_grid',
    'grid_spacing',
    'uniform_grid',
    'validate_window',
    'parse_number_list',

    # Result Storage
    'ResultStorage',
    'RunManifest',
    'read_csv',
    'atomic_write_text',

    # Sweeps
    'SweepResult',
    'gather_sweep',
    'run_sweep',
]
