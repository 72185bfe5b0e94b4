"""
Tracking variational problems of variable fractional order.

Minimises J[x] = ∫_a^b [D^{α(t)} x(t) - g(t)]² dt with x(a) = x_a and
x(b) = x_b, D the left Marchaud derivative. Replacing D by its n = 1
expansion and declaring u = A s^{-α} x + B s^{1-α} x' + Σ C_k s^{1-k-α} V_k
as the control gives the control system

    x'   = B⁻¹ s^{α-1} u - A B⁻¹ s⁻¹ x - Σ B⁻¹ C_k s^{-k} V_k
    V_k' = (k-1) s^{k-2} x

whose Pontryagin conditions form a linear boundary-value problem in
(x, V_2..V_N, λ_1..λ_N).

The costate equations do not involve x or V. Shooting therefore takes
the terminal costate λ_1(b) as unknown (λ_k(b) = 0 for k >= 2), sweeps
the costate backward and the state forward, each in its stable
direction, and drives x(b) - x_b to zero by Newton.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, List, Sequence, Tuple

import numpy as np
from scipy.integrate import cumulative_trapezoid, simpson
from scipy.interpolate import CubicHermiteSpline

from varfrac.exceptions import DomainError
from varfrac.solvers.fde import fde_coefficients
from varfrac.solvers.integrator import (
    DEFAULT_START_RATIO,
    Trajectory,
    graded_mesh,
    rk4_integrate,
)
from varfrac.solvers.shooting import newton_solve
from varfrac.specfun import OrderFunction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrackingVariationalProblem:
    """
    Minimise ∫_a^b [D^{α(t)} x - target]² dt subject to x(a) = x_a, x(b) = x_b.
    """
    order: OrderFunction
    target: Callable[[float], float]
    a: float = 0.0
    b: float = 1.0
    x_a: float = 0.0
    x_b: float = 1.0

    def __post_init__(self):
        if not self.a < self.b:
            raise DomainError(f"Variational problem requires a < b, got a={self.a}, b={self.b}")
        if not (math.isfinite(self.x_a) and math.isfinite(self.x_b)):
            raise DomainError("Boundary values must be finite")


@dataclass(frozen=True)
class PontryaginSystem:
    """
    State/costate system of the reduced control problem.

    Full state layout: (x, V_2..V_N, λ_1..λ_N). The state equations see
    the costate only through λ_1 and the costate equations do not involve
    the state, so each half of ``rhs`` can be evaluated on its own.
    """
    N: int
    rhs: Callable[[float, np.ndarray], np.ndarray]
    a: float
    b: float

    @property
    def state_dim(self) -> int:
        return 2 * self.N

    @property
    def labels(self) -> Tuple[str, ...]:
        moments = tuple(f'V_{k}' for k in range(2, self.N + 1))
        costates = tuple(f'lambda_{k}' for k in range(1, self.N + 1))
        return ('x',) + moments + costates

    def state_rhs(self, t: float, state: np.ndarray, costate_1: float) -> np.ndarray:
        """Derivative of (x, V_2..V_N) for a given λ_1."""
        full = np.zeros(2 * self.N)
        full[:self.N] = state
        full[self.N] = costate_1
        return self.rhs(t, full)[:self.N]

    def costate_rhs(self, t: float, costate: np.ndarray) -> np.ndarray:
        """Derivative of (λ_1..λ_N)."""
        return self.rhs(t, np.concatenate([np.zeros(self.N), costate]))[self.N:]


@dataclass
class ShootingResult:
    """Outcome of the shooting solve."""
    trajectory: Trajectory
    converged: bool
    iterations: int
    residual: np.ndarray
    residual_history: List[float] = field(default_factory=list)
    initial_costate: np.ndarray = None
    terminal_costate: float = 0.0


def _frozen(problem: TrackingVariationalProblem, N: int, t: float):
    s = t - problem.a
    if s <= 0.0:
        raise DomainError(f"Control system is singular at t=a; evaluate at t > {problem.a}")
    alpha = problem.order(t)
    big_a, big_b, big_c = fde_coefficients(alpha, N)
    return s, alpha, big_a, big_b, np.asarray(big_c)


def _dynamics(t: float, x: float, u: float, moments: np.ndarray,
              problem: TrackingVariationalProblem, N: int) -> float:
    s, alpha, big_a, big_b, big_c = _frozen(problem, N, t)
    orders = np.arange(2, N + 1)
    history = float(np.dot(big_c, s ** (-orders.astype(float)) * moments))
    return (s ** (alpha - 1.0) * u - big_a / s * x - history) / big_b


def hamiltonian(t: float, x: float, u: float, moments: Sequence[float],
                costate: Sequence[float], problem: TrackingVariationalProblem, N: int) -> float:
    """
    H = (u - g)² + λ_1 f(t, x, u, V) + Σ_{k=2}^{N} λ_k (k-1) s^{k-2} x.

    Args:
        t: Time, t > a
        x: State
        u: Control
        moments: V_2..V_N
        costate: λ_1..λ_N
        problem: The variational problem
        N: Truncation size

    Raises:
        DomainError: If the vector lengths do not match N
    """
    moments = np.asarray(moments, dtype=float)
    costate = np.asarray(costate, dtype=float)
    if moments.size != N - 1 or costate.size != N:
        raise DomainError(f"Expected {N - 1} moments and {N} costates, "
                          f"got {moments.size} and {costate.size}")
    s = t - problem.a
    orders = np.arange(2, N + 1)
    running = (u - problem.target(t)) ** 2
    coupling = float(np.dot(costate[1:], (orders - 1) * s ** (orders - 2.0))) * x
    return running + costate[0] * _dynamics(t, x, u, moments, problem, N) + coupling


def optimal_control(t: float, costate_1: float, problem: TrackingVariationalProblem, N: int) -> float:
    """Stationary point of H in u: g - ½ B⁻¹ s^{α-1} λ_1."""
    s, alpha, _, big_b, _ = _frozen(problem, N, t)
    return problem.target(t) - 0.5 * s ** (alpha - 1.0) * costate_1 / big_b


def build_pontryagin(problem: TrackingVariationalProblem, N: int) -> PontryaginSystem:
    """
    Build the Pontryagin system for truncation size N.

    x'   = B⁻¹s^{α-1}g - ½B⁻²s^{2α-2}λ_1 - AB⁻¹s⁻¹x - ΣB⁻¹C_k s^{-k}V_k
    V_k' = (k-1)s^{k-2}x
    λ_1' = AB⁻¹s⁻¹λ_1 - Σ(k-1)s^{k-2}λ_k
    λ_k' = B⁻¹C_k s^{-k}λ_1
    """
    if N < 2:
        raise DomainError(f"Pontryagin system requires N >= 2, got {N}")
    orders = np.arange(2, N + 1)

    def rhs(t: float, full: np.ndarray) -> np.ndarray:
        s, alpha, big_a, big_b, big_c = _frozen(problem, N, t)
        x = full[0]
        moments = full[1:N]
        costate = full[N:]
        drive = s ** (alpha - 1.0) / big_b
        decay = s ** (-orders.astype(float))
        growth = (orders - 1) * s ** (orders - 2.0)
        derivative = np.empty_like(full)
        derivative[0] = (drive * problem.target(t) - 0.5 * drive ** 2 * costate[0]
                         - big_a / big_b / s * x
                         - float(np.dot(big_c, decay * moments)) / big_b)
        derivative[1:N] = growth * x
        derivative[N] = big_a / big_b / s * costate[0] - float(np.dot(growth, costate[1:]))
        derivative[N + 1:] = big_c / big_b * decay * costate[0]
        return derivative

    return PontryaginSystem(N=N, rhs=rhs, a=problem.a, b=problem.b)


def shoot(system: PontryaginSystem, problem: TrackingVariationalProblem,
          start_eps: float = 1e-6, step: float = 1e-3, newton_tol: float = 1e-8,
          max_iter: int = 25, perturbation: float = 1e-6,
          start_ratio: float = DEFAULT_START_RATIO) -> ShootingResult:
    """
    Solve the Pontryagin boundary-value problem by shooting.

    Boundary conditions: x(a) = x_a, V_k(a) = 0, x(b) = x_b, λ_k(b) = 0
    for k >= 2. The costate is linear and homogeneous in λ_1(b), so it is
    integrated backward once with λ_1(b) = 1 and rescaled; λ_1 enters the
    forward state sweep through its cubic Hermite interpolant.

    Args:
        system: Output of build_pontryagin
        problem: The variational problem
        start_eps: Offset of the first mesh point from a
        step: Fixed RK4 step away from a
        newton_tol: Tolerance on |x(b) - x_b|
        max_iter: Newton iteration budget
        perturbation: Finite-difference step of the Jacobian
        start_ratio: Grading ratio of the mesh near a

    Returns:
        ShootingResult; ``residual`` is [x(b)-x_b, λ_2(b), ..., λ_N(b)] and
        ``initial_costate`` is λ(a + start_eps)

    Raises:
        ConvergenceError: If Newton does not reach newton_tol in max_iter steps
    """
    N = system.N
    mesh = graded_mesh(system.a, start_eps, system.b, step, start_ratio)
    terminal = np.zeros(N)
    terminal[0] = 1.0
    unit_costate = rk4_integrate(system.costate_rhs, mesh[::-1], terminal)[::-1]
    unit_slopes = np.array([system.costate_rhs(t, lam)[0] for t, lam in zip(mesh, unit_costate)])
    unit_lambda_1 = CubicHermiteSpline(mesh, unit_costate[:, 0], unit_slopes)
    initial_state = np.array([problem.x_a] + [0.0] * (N - 1))

    def forward(scale: float) -> np.ndarray:
        return rk4_integrate(lambda t, y: system.state_rhs(t, y, scale * float(unit_lambda_1(t))),
                             mesh, initial_state)

    def residual(unknowns: np.ndarray) -> np.ndarray:
        return np.array([forward(unknowns[0])[-1, 0] - problem.x_b])

    logger.info("Shooting on %d mesh points (N=%d)", len(mesh), N)
    outcome = newton_solve(residual, [0.0], tol=newton_tol, max_iter=max_iter,
                           perturbation=perturbation)
    scale = float(outcome.solution[0])
    states = forward(scale)
    costate = scale * unit_costate
    trajectory = Trajectory(times=mesh, states=np.hstack([states, costate]), labels=system.labels)
    full_residual = np.concatenate([[states[-1, 0] - problem.x_b], costate[-1, 1:]])
    logger.info("Shooting converged in %d iterations, residual %.3e",
                outcome.iterations, outcome.residual_norm)
    return ShootingResult(trajectory=trajectory, converged=outcome.converged,
                          iterations=outcome.iterations, residual=full_residual,
                          residual_history=outcome.history,
                          initial_costate=costate[0].copy(), terminal_costate=scale)


def trajectory_from_path(times: Sequence[float], x_values: Sequence[float],
                         problem: TrackingVariationalProblem, N: int) -> Trajectory:
    """
    Admissible trajectory for a given path x, with V_k = (k-1)∫_a^t s^{k-2} x by trapezoid.
    """
    times = np.asarray(times, dtype=float)
    x_values = np.asarray(x_values, dtype=float)
    s = times - problem.a
    columns = [x_values]
    for k in range(2, N + 1):
        integrand = (k - 1) * s ** (k - 2.0) * x_values
        columns.append(cumulative_trapezoid(integrand, times, initial=0.0))
    labels = ('x',) + tuple(f'V_{k}' for k in range(2, N + 1))
    return Trajectory(times=times, states=np.column_stack(columns), labels=labels)


def evaluate_functional(trajectory: Trajectory, problem: TrackingVariationalProblem, N: int) -> float:
    """
    J~ = ∫ [u - g]² dt along a trajectory by composite Simpson.

    u = A s^{-α} x + B s^{1-α} x' + Σ C_k s^{1-k-α} V_k with x' from
    second-order differences on the trajectory mesh.

    Raises:
        DomainError: If the trajectory starts at or before a
    """
    times = trajectory.times
    if not times[0] > problem.a:
        raise DomainError("Trajectory must start after a (the control is singular at t=a)")
    s = times - problem.a
    x = trajectory.column('x')
    x_dot = np.gradient(x, times, edge_order=2)
    gap = np.empty_like(times)
    for i, t in enumerate(times):
        alpha = problem.order(t)
        big_a, big_b, big_c = fde_coefficients(alpha, N)
        history = sum(c * s[i] ** (1.0 - k - alpha) * trajectory.column(f'V_{k}')[i]
                      for k, c in zip(range(2, N + 1), big_c))
        control = big_a * s[i] ** (-alpha) * x[i] + big_b * s[i] ** (1.0 - alpha) * x_dot[i] + history
        gap[i] = control - problem.target(t)
    return float(simpson(gap ** 2, x=times))
