"""
Reference operators.

Closed forms for power functions and weakly singular quadrature oracles
for general smooth functions.
"""

from varfrac.operators.functions import SmoothFunction, PowerFunction
from varfrac.operators.closed_form import (
    power_left_integral,
    power_left_marchaud,
    power_left_rl_derivative,
)
from varfrac.operators.oracles import (
    oracle_left_integral,
    oracle_right_integral,
    oracle_left_marchaud,
    oracle_left_marchaud_quotient,
    oracle_left_rl_derivative,
    oracle_right_marchaud,
    oracle_right_rl_derivative,
)

__all__ = [
    'SmoothFunction',
    'PowerFunction',
    'power_left_integral',
    'power_left_marchaud',
    'power_left_rl_derivative',
    'oracle_left_integral',
    'oracle_right_integral',
    'oracle_left_marchaud',
    'oracle_left_marchaud_quotient',
    'oracle_left_rl_derivative',
    'oracle_right_marchaud',
    'oracle_right_rl_derivative',
]
