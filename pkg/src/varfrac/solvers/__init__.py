"""
Solvers for variable-order fractional differential equations and
variational problems reduced to classical ODE systems.
"""

from varfrac.solvers.integrator import Trajectory, graded_mesh, rk4_step, rk4_integrate
from varfrac.solvers.fde import (
    LinearFdeProblem,
    ReducedOdeSystem,
    fde_coefficients,
    reduce,
    solve_ivp,
)
from varfrac.solvers.shooting import NewtonResult, fd_jacobian, newton_solve
from varfrac.solvers.variational import (
    TrackingVariationalProblem,
    PontryaginSystem,
    ShootingResult,
    hamiltonian,
    optimal_control,
    build_pontryagin,
    shoot,
    trajectory_from_path,
    evaluate_functional,
)

__all__ = [
    'Trajectory',
    'graded_mesh',
    'rk4_step',
    'rk4_integrate',
    'LinearFdeProblem',
    'ReducedOdeSystem',
    'fde_coefficients',
    'reduce',
    'solve_ivp',
    'NewtonResult',
    'fd_jacobian',
    'newton_solve',
    'TrackingVariationalProblem',
    'PontryaginSystem',
    'ShootingResult',
    'hamiltonian',
    'optimal_control',
    'build_pontryagin',
    'shoot',
    'trajectory_from_path',
    'evaluate_functional',
]
