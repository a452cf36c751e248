"""
Metrology Package
Информация Фишера, неопределённость частоты атома и её масштабирование
"""

from .fisher import fisher_information
from .uncertainty import (
    UncertaintySource,
    UncertaintyCurve,
    population_with_derivative,
    uncertainty_at,
    uncertainty_curve
)
from .scaling import ScalingFit, optimal_times, scaling_fit

__all__ = [
    'fisher_information',

    # Uncertainty
    'UncertaintySource',
    'UncertaintyCurve',
    'population_with_derivative',
    'uncertainty_at',
    'uncertainty_curve',

    # Scaling
    'ScalingFit',
    'optimal_times',
    'scaling_fit',
]
