"""
Special functions and the order-function abstraction.
"""

from varfrac.specfun.functions import gamma, digamma, binom_signed, gamma_ratio
from varfrac.specfun.order import OrderFunction

__all__ = [
    'gamma',
    'digamma',
    'binom_signed',
    'gamma_ratio',
    'OrderFunction',
]
