"""
Pipelines Package
Команды CLI: расчёт, запись результатов и манифестов
"""

from .common import (
    RunSettings,
    PipelineRun,
    load_run_settings,
    read_parameter_file,
    params_from_record,
    load_series_csv
)
from .dynamics import run_dynamics
from .analytic import run_poles, run_landscape
from .spectral import run_spectrum, run_duration_scaling, run_convergence
from .metrology import run_metrology, run_scaling

__all__ = [
    # Settings
    'RunSettings',
    'PipelineRun',
    'load_run_settings',
    'read_parameter_file',
    'params_from_record',
    'load_series_csv',

    # Commands
    'run_dynamics',
    'run_poles',
    'run_landscape',
    'run_spectrum',
    'run_duration_scaling',
    'run_convergence',
    'run_metrology',
    'run_scaling',
]
