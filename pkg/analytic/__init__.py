"""
Analytic Package
Решение бесконечной решётки: полюса связанных состояний, разрез,
долговременный закон и приближение слабой связи
"""

from .poles import (
    BoundStateSolution,
    pole_function_upper,
    pole_function_lower,
    self_energy,
    self_energy_derivative,
    find_poles,
    residue_weights,
    solve_bound_states
)

from .branch_cut import (
    BranchCutDensity,
    branch_cut_density,
    branch_cut_integral,
    alpha_analytic,
    pe_longtime
)

from .perturbative import (
    PerturbativeSolution,
    PerturbativeTerms,
    perturbative_solution,
    perturbative_population,
    perturbative_terms,
    perturbative_variance,
    perturbative_uncertainty
)

from .landscape import (
    BoundStateLandscape,
    LANDSCAPE_FIELDS,
    bound_state_landscape
)

__all__ = [
    # Poles
    'BoundStateSolution',
    'pole_function_upper',
    'pole_function_lower',
    'self_energy',
    'self_energy_derivative',
    'find_poles',
    'residue_weights',
    'solve_bound_states',

    # Branch cut
    'BranchCutDensity',
    'branch_cut_density',
    'branch_cut_integral',
    'alpha_analytic',
    'pe_longtime',

    # Perturbative
    'PerturbativeSolution',
    'PerturbativeTerms',
    'perturbative_solution',
    'perturbative_population',
    'perturbative_terms',
    'perturbative_variance',
    'perturbative_uncertainty',

    # Landscape
    'BoundStateLandscape',
    'LANDSCAPE_FIELDS',
    'bound_state_landscape',
]
