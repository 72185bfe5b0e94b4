"""
Integer-derivative expansions of the variable-order operators.
"""

from varfrac.expansion.params import ApproxReport, ExpansionParams, MomentVector, Side
from varfrac.expansion.moments import moments_left, moments_right, clear_moment_cache
from varfrac.expansion.coefficients import (
    coeff_a_deriv_left,
    coeff_b_deriv_left,
    coeff_a_right,
    coeff_b_right,
    coeff_a_integral,
    coeff_b_integral,
)
from varfrac.expansion.approximations import (
    s1_left,
    s2_left,
    s1_right,
    s2_right,
    approx_left_rl_derivative,
    approx_right_rl_derivative,
    approx_left_marchaud,
    approx_right_marchaud,
    approx_left_integral,
)
from varfrac.expansion.bounds import bound_e1, bound_e2, bound_en_integral, sup_norm

__all__ = [
    'ApproxReport',
    'ExpansionParams',
    'MomentVector',
    'Side',
    'moments_left',
    'moments_right',
    'clear_moment_cache',
    'coeff_a_deriv_left',
    'coeff_b_deriv_left',
    'coeff_a_right',
    'coeff_b_right',
    'coeff_a_integral',
    'coeff_b_integral',
    's1_left',
    's2_left',
    's1_right',
    's2_right',
    'approx_left_rl_derivative',
    'approx_right_rl_derivative',
    'approx_left_marchaud',
    'approx_right_marchaud',
    'approx_left_integral',
    'bound_e1',
    'bound_e2',
    'bound_en_integral',
    'sup_norm',
]
