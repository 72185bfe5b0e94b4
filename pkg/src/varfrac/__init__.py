"""
Variable-order fractional calculus.

Provides variable-order Riemann–Liouville and Marchaud operators, their
integer-derivative expansion approximations with a-priori error bounds,
and two application solvers built on the expansions:
- linear fractional differential equations reduced to ODE systems
- tracking variational problems reduced to a Pontryagin system
"""

__version__ = '0.1.0'
