"""
Bound-State Metrology Configuration
Файл: config.py

Численные константы по умолчанию для симулятора: параметры модели,
сетки по времени, допуски поиска полюсов и квадратур, критерии окна
регулярных осцилляций и БПФ. Любую константу можно переопределить
через .env или переменные окружения.
"""

import os
from pathlib import Path

from dotenv import load_dotenv


def load_env() -> bool:
    """Загрузить переменные из .env файла (если он есть)"""
    env_path = Path(__file__).parent / '.env'

    if not env_path.exists():
        return False

    return load_dotenv(env_path, override=False)


def safe_int(value: str, default: int) -> int:
    """Безопасное преобразование в int"""
    try:
        return int(float(value))
    except (ValueError, TypeError):
        return default


def safe_float(value: str, default: float) -> float:
    """Безопасное преобразование в float"""
    try:
        return float(value)
    except (ValueError, TypeError):
        return default


def safe_bool(value: str) -> bool:
    """Безопасное преобразование в bool"""
    if isinstance(value, bool):
        return value
    if isinstance(value, str):
        return value.lower() in ['true', '1', 'yes']
    return False


# Загружаем .env при импорте модуля
load_env()

# ============================================================================
# DIRECTORIES
# ============================================================================
PROJECT_ROOT = Path(__file__).parent

LOGS_DIR = Path(os.getenv('BSM_LOGS_DIR', str(PROJECT_ROOT / 'logs')))
RESULTS_DIR = Path(os.getenv('BSM_RESULTS_DIR', str(PROJECT_ROOT / 'results')))

# ============================================================================
# VERSION
# ============================================================================
TOOL_NAME = 'bound-state-metrology'
TOOL_VERSION = '1.0.0'

# ============================================================================
# DEFAULT PHYSICS (единицы ξ)
# ============================================================================
DEFAULT_OMEGA_ATOM = safe_float(os.getenv('DEFAULT_OMEGA_ATOM', '11.0'), 11.0)
DEFAULT_OMEGA_CAVITY = safe_float(os.getenv('DEFAULT_OMEGA_CAVITY', '10.0'), 10.0)
DEFAULT_COUPLING = safe_float(os.getenv('DEFAULT_COUPLING', '1.3'), 1.3)
DEFAULT_HOPPING = 1.0
DEFAULT_QUBITS = safe_int(os.getenv('DEFAULT_QUBITS', '8'), 8)

# ============================================================================
# TIME GRID (единицы 1/ξ)
# ============================================================================
DEFAULT_DT = safe_float(os.getenv('DEFAULT_DT', '0.02'), 0.02)
DEFAULT_T_MAX = safe_float(os.getenv('DEFAULT_T_MAX', '300.0'), 300.0)

# Сколько моментов времени обрабатывать за один матричный проход
EVOLVE_CHUNK = safe_int(os.getenv('EVOLVE_CHUNK', '2048'), 2048)

# Длина ряда для поиска окна: max(WINDOW_TMAX_FACTOR * n, WINDOW_TMAX_MIN)
WINDOW_TMAX_FACTOR = safe_float(os.getenv('WINDOW_TMAX_FACTOR', '0.75'), 0.75)
WINDOW_TMAX_MIN = safe_float(os.getenv('WINDOW_TMAX_MIN', '40.0'), 40.0)

# ============================================================================
# ROOT FINDING (полюса связанных состояний)
# ============================================================================
POLE_EDGE_OFFSET = safe_float(os.getenv('POLE_EDGE_OFFSET', '1e-8'), 1e-8)
POLE_XTOL = safe_float(os.getenv('POLE_XTOL', '1e-12'), 1e-12)
POLE_RESIDUAL_TOL = safe_float(os.getenv('POLE_RESIDUAL_TOL', '1e-10'), 1e-10)
POLE_NEWTON_STEPS = safe_int(os.getenv('POLE_NEWTON_STEPS', '5'), 5)

# ============================================================================
# QUADRATURE (интеграл по разрезу)
# ============================================================================
QUAD_START_ORDER = safe_int(os.getenv('QUAD_START_ORDER', '64'), 64)
QUAD_MAX_ORDER = safe_int(os.getenv('QUAD_MAX_ORDER', '8192'), 8192)
QUAD_TOL = safe_float(os.getenv('QUAD_TOL', '1e-8'), 1e-8)
QUAD_TIME_CHUNK = safe_int(os.getenv('QUAD_TIME_CHUNK', '256'), 256)

# ============================================================================
# DERIVATIVES & FISHER INFORMATION
# ============================================================================
DERIVATIVE_STEP = safe_float(os.getenv('DERIVATIVE_STEP', '1e-5'), 1e-5)
DERIVATIVE_RICHARDSON = safe_bool(os.getenv('DERIVATIVE_RICHARDSON', 'true'))

# |P(Ω+h) - P(Ω-h)| ниже порога считается нулём (шум округления)
DERIVATIVE_NOISE_FLOOR = safe_float(os.getenv('DERIVATIVE_NOISE_FLOOR', '1e-10'), 1e-10)

POPULATION_TOL = safe_float(os.getenv('POPULATION_TOL', '1e-12'), 1e-12)

# ============================================================================
# REGULAR WINDOW DETECTION
# ============================================================================
WINDOW_PERIODS = safe_float(os.getenv('WINDOW_PERIODS', '4'), 4.0)
WINDOW_THRESHOLD = safe_float(os.getenv('WINDOW_THRESHOLD', '0.15'), 0.15)
WINDOW_MIN_PERIODS = safe_float(os.getenv('WINDOW_MIN_PERIODS', '20'), 20.0)

# ============================================================================
# FFT
# ============================================================================
FFT_PAD_FACTOR = safe_int(os.getenv('FFT_PAD_FACTOR', '8'), 8)
FFT_TAPER = os.getenv('FFT_TAPER', 'boxcar')
FFT_MIN_SAMPLES = safe_int(os.getenv('FFT_MIN_SAMPLES', '256'), 256)
GRID_UNIFORM_RTOL = safe_float(os.getenv('GRID_UNIFORM_RTOL', '1e-6'), 1e-6)

# ============================================================================
# OSCILLATION STATISTICS
# ============================================================================
STATS_PERCENTILE = safe_float(os.getenv('STATS_PERCENTILE', '1.0'), 1.0)
STATS_MIN_PERIODS = safe_float(os.getenv('STATS_MIN_PERIODS', '5'), 5.0)

# ============================================================================
# SCALING FITS
# ============================================================================
SCALING_MIN_POINTS = safe_int(os.getenv('SCALING_MIN_POINTS', '10'), 10)
DURATION_MIN_POINTS = safe_int(os.getenv('DURATION_MIN_POINTS', '4'), 4)

# ============================================================================
# SWEEPS
# ============================================================================
MAX_WORKERS = safe_int(os.getenv('MAX_WORKERS', '4'), 4)

# ============================================================================
# LOGGING
# ============================================================================
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO').upper()
LOG_TO_FILE = safe_bool(os.getenv('LOG_TO_FILE', 'true'))


class Config:
    """Конфигурация симулятора (зеркало констант модуля)"""

    PROJECT_ROOT = PROJECT_ROOT
    LOGS_DIR = LOGS_DIR
    RESULTS_DIR = RESULTS_DIR

    TOOL_NAME = TOOL_NAME
    TOOL_VERSION = TOOL_VERSION

    DEFAULT_OMEGA_ATOM = DEFAULT_OMEGA_ATOM
    DEFAULT_OMEGA_CAVITY = DEFAULT_OMEGA_CAVITY
    DEFAULT_COUPLING = DEFAULT_COUPLING
    DEFAULT_HOPPING = DEFAULT_HOPPING
    DEFAULT_QUBITS = DEFAULT_QUBITS

    DEFAULT_DT = DEFAULT_DT
    DEFAULT_T_MAX = DEFAULT_T_MAX
    EVOLVE_CHUNK = EVOLVE_CHUNK
    WINDOW_TMAX_FACTOR = WINDOW_TMAX_FACTOR
    WINDOW_TMAX_MIN = WINDOW_TMAX_MIN

    POLE_EDGE_OFFSET = POLE_EDGE_OFFSET
    POLE_XTOL = POLE_XTOL
    POLE_RESIDUAL_TOL = POLE_RESIDUAL_TOL
    POLE_NEWTON_STEPS = POLE_NEWTON_STEPS

    QUAD_START_ORDER = QUAD_START_ORDER
    QUAD_MAX_ORDER = QUAD_MAX_ORDER
    QUAD_TOL = QUAD_TOL
    QUAD_TIME_CHUNK = QUAD_TIME_CHUNK

    DERIVATIVE_STEP = DERIVATIVE_STEP
    DERIVATIVE_RICHARDSON = DERIVATIVE_RICHARDSON
    DERIVATIVE_NOISE_FLOOR = DERIVATIVE_NOISE_FLOOR
    POPULATION_TOL = POPULATION_TOL

    WINDOW_PERIODS = WINDOW_PERIODS
    WINDOW_THRESHOLD = WINDOW_THRESHOLD
    WINDOW_MIN_PERIODS = WINDOW_MIN_PERIODS

    FFT_PAD_FACTOR = FFT_PAD_FACTOR
    FFT_TAPER = FFT_TAPER
    FFT_MIN_SAMPLES = FFT_MIN_SAMPLES
    GRID_UNIFORM_RTOL = GRID_UNIFORM_RTOL

    STATS_PERCENTILE = STATS_PERCENTILE
    STATS_MIN_PERIODS = STATS_MIN_PERIODS

    SCALING_MIN_POINTS = SCALING_MIN_POINTS
    DURATION_MIN_POINTS = DURATION_MIN_POINTS

    MAX_WORKERS = MAX_WORKERS

    LOG_LEVEL = LOG_LEVEL
    LOG_TO_FILE = LOG_TO_FILE


config = Config()


def validate_config() -> bool:
    """
    Проверить корректность конфигурации

    Returns:
        True если всё в порядке

    Raises:
        ValueError: со списком всех найденных проблем
    """
    errors = []

    positive = {
        'DEFAULT_DT': DEFAULT_DT,
        'DEFAULT_T_MAX': DEFAULT_T_MAX,
        'POLE_EDGE_OFFSET': POLE_EDGE_OFFSET,
        'POLE_XTOL': POLE_XTOL,
        'POLE_RESIDUAL_TOL': POLE_RESIDUAL_TOL,
        'QUAD_TOL': QUAD_TOL,
        'DERIVATIVE_STEP': DERIVATIVE_STEP,
        'POPULATION_TOL': POPULATION_TOL,
        'WINDOW_PERIODS': WINDOW_PERIODS,
        'WINDOW_THRESHOLD': WINDOW_THRESHOLD,
        'WINDOW_TMAX_FACTOR': WINDOW_TMAX_FACTOR,
    }
    for name, value in positive.items():
        if not value > 0:
            errors.append(f"{name} must be positive (got {value})")

    if DERIVATIVE_NOISE_FLOOR < 0:
        errors.append("DERIVATIVE_NOISE_FLOOR must be non-negative")

    if QUAD_START_ORDER < 2 or QUAD_MAX_ORDER < QUAD_START_ORDER:
        errors.append("QUAD_START_ORDER must be >= 2 and <= QUAD_MAX_ORDER")

    if FFT_PAD_FACTOR < 1:
        errors.append("FFT_PAD_FACTOR must be >= 1")

    if not 0 < STATS_PERCENTILE < 50:
        errors.append("STATS_PERCENTILE must lie in (0, 50)")

    if MAX_WORKERS < 1:
        errors.append("MAX_WORKERS must be >= 1")

    if EVOLVE_CHUNK < 1 or QUAD_TIME_CHUNK < 1:
        errors.append("EVOLVE_CHUNK and QUAD_TIME_CHUNK must be >= 1")

    if LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
        errors.append(f"LOG_LEVEL must be a logging level name (got {LOG_LEVEL})")

    if errors:
        error_msg = "Configuration errors:\n" + "\n".join(f"  - {e}" for e in errors)
        raise ValueError(error_msg)

    return True
