"""
Linear variable-order fractional differential equations.

Solves  D^{α(t)} x(t) + c·x(t) = g(t),  x(a) = x0,  with D the left
Marchaud derivative, by replacing D with its n = 1 expansion:

    D x ≈ A s^{-α} x + B s^{1-α} x' + Σ_{k=2}^{N} C_k s^{1-k-α} V_k,   s = t - a,

and treating the moments V_k as extra states with V_k' = (k-1) s^{k-2} x.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Tuple

import numpy as np

from varfrac.exceptions import DomainError
from varfrac.solvers.integrator import (
    DEFAULT_START_RATIO,
    Trajectory,
    graded_mesh,
    rk4_integrate,
)
from varfrac.specfun import OrderFunction, gamma_ratio

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearFdeProblem:
    """
    D^{α(t)} x + linear_coeff·x = source on [a, horizon] with x(a) = x0.
    """
    order: OrderFunction
    source: Callable[[float], float]
    linear_coeff: float = 0.0
    a: float = 0.0
    x0: float = 0.0
    horizon: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.x0):
            raise DomainError(f"Initial value must be finite, got {self.x0}")
        if not self.horizon > self.a:
            raise DomainError(f"Horizon must exceed a, got a={self.a}, horizon={self.horizon}")


@dataclass(frozen=True)
class ReducedOdeSystem:
    """
    Classical ODE system replacing the fractional equation.

    State layout: (x, V_2, ..., V_N).
    """
    N: int
    rhs: Callable[[float, np.ndarray], np.ndarray]
    a: float
    horizon: float
    initial_state: Tuple[float, ...]

    @property
    def state_dim(self) -> int:
        return self.N

    @property
    def labels(self) -> Tuple[str, ...]:
        return ('x',) + tuple(f'V_{k}' for k in range(2, self.N + 1))


@lru_cache(maxsize=8192)
def _coefficients(alpha: float, N: int) -> Tuple[float, float, Tuple[float, ...]]:
    a_sum = 1.0 + sum(gamma_ratio([p - 1 + alpha], [alpha, p]) for p in range(2, N + 1))
    b_sum = 1.0 + sum(gamma_ratio([p - 1 + alpha], [alpha - 1.0, p + 1]) for p in range(1, N + 1))
    big_a = a_sum * gamma_ratio([], [1.0 - alpha])
    big_b = b_sum * gamma_ratio([], [2.0 - alpha])
    big_c = tuple(gamma_ratio([k - 1 + alpha], [-alpha, 1.0 + alpha, k]) for k in range(2, N + 1))
    return big_a, big_b, big_c


def fde_coefficients(alpha: float, N: int) -> Tuple[float, float, List[float]]:
    """
    Coefficients A(α, N), B(α, N) and C_k(α), k = 2..N, of the reduced system.

    A = 1/Γ(1-α)[1 + Σ_{p=2}^{N} Γ(p-1+α)/(Γ(α)(p-1)!)]
    B = 1/Γ(2-α)[1 + Σ_{p=1}^{N} Γ(p-1+α)/(Γ(α-1)p!)]
    C_k = Γ(k-1+α)/(Γ(-α)Γ(1+α)(k-1)!)

    Raises:
        DomainError: If alpha is outside (0, 1) or N < 2
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"Order must lie in (0, 1), got {alpha}")
    if N < 2:
        raise DomainError(f"Reduction requires N >= 2, got {N}")
    big_a, big_b, big_c = _coefficients(float(alpha), int(N))
    return big_a, big_b, list(big_c)


def _offset(t: float, a: float) -> float:
    s = t - a
    if s <= 0.0:
        raise DomainError(f"Reduced system is singular at t=a; evaluate at t > {a}")
    return s


def reduce(problem: LinearFdeProblem, N: int) -> ReducedOdeSystem:
    """
    Build the reduced ODE system for truncation size N.

    x' = [g - (A s^{-α} + c) x - Σ C_k s^{1-k-α} V_k] / (B s^{1-α})
    V_k' = (k-1) s^{k-2} x
    """
    if N < 2:
        raise DomainError(f"Reduction requires N >= 2, got {N}")
    orders = np.arange(2, N + 1)

    def rhs(t: float, state: np.ndarray) -> np.ndarray:
        s = _offset(t, problem.a)
        alpha = problem.order(t)
        big_a, big_b, big_c = _coefficients(alpha, N)
        x = state[0]
        moments = state[1:]
        history = float(np.dot(big_c, s ** (1.0 - orders - alpha) * moments))
        forcing = problem.source(t) - (big_a * s ** (-alpha) + problem.linear_coeff) * x - history
        derivative = np.empty_like(state)
        derivative[0] = forcing / (big_b * s ** (1.0 - alpha))
        derivative[1:] = (orders - 1) * s ** (orders - 2.0) * x
        return derivative

    initial = (problem.x0,) + (0.0,) * (N - 1)
    return ReducedOdeSystem(N=N, rhs=rhs, a=problem.a, horizon=problem.horizon,
                            initial_state=initial)


def solve_ivp(system: ReducedOdeSystem, start_eps: float = 1e-6, step: float = 1e-3,
              start_ratio: float = DEFAULT_START_RATIO) -> Trajectory:
    """
    Integrate the reduced system with RK4 from a + start_eps to the horizon.

    The initial state is (x0, 0, ..., 0) at the shifted start.

    Raises:
        NonFiniteStateError: If the state blows up
    """
    mesh = graded_mesh(system.a, start_eps, system.horizon, step, start_ratio)
    logger.info("Integrating reduced system (N=%d) on %d mesh points", system.N, len(mesh))
    states = rk4_integrate(system.rhs, mesh, system.initial_state)
    return Trajectory(times=mesh, states=states, labels=system.labels)
