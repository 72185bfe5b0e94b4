"""
Newton iteration with a finite-difference Jacobian.

Used by the shooting solver; the Jacobian columns are independent
integrations and can be evaluated on an executor.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from varfrac.exceptions import ConvergenceError

logger = logging.getLogger(__name__)

Residual = Callable[[np.ndarray], np.ndarray]


@dataclass
class NewtonResult:
    """Outcome of a Newton solve."""
    solution: np.ndarray
    residual: np.ndarray
    iterations: int
    converged: bool
    history: List[float] = field(default_factory=list)

    @property
    def residual_norm(self) -> float:
        return float(np.linalg.norm(self.residual))


def fd_jacobian(residual: Residual, point: np.ndarray, base: np.ndarray,
                perturbation: float = 1e-6, executor=None) -> np.ndarray:
    """
    Forward-difference Jacobian of residual at point.

    Args:
        residual: Map from unknowns to residuals
        point: Unknowns at which to differentiate
        base: residual(point), already evaluated
        perturbation: Step, scaled by max(1, |point_j|)
        executor: Optional object with ``map_ordered(fn, items)`` for the columns

    Returns:
        Square Jacobian matrix
    """
    steps = perturbation * np.maximum(1.0, np.abs(point))

    def column(j: int) -> np.ndarray:
        shifted = point.copy()
        shifted[j] += steps[j]
        return (residual(shifted) - base) / steps[j]

    indices = list(range(point.size))
    columns = executor.map_ordered(column, indices) if executor else [column(j) for j in indices]
    return np.column_stack(columns)


def newton_solve(residual: Residual, guess, tol: float = 1e-8, max_iter: int = 25,
                 perturbation: float = 1e-6, executor=None,
                 strict: bool = True) -> NewtonResult:
    """
    Solve residual(s) = 0 by Newton's method.

    Args:
        residual: Map from unknowns to residuals (same length)
        guess: Initial unknowns
        tol: Stop when the residual 2-norm is <= tol
        max_iter: Maximum number of Newton updates
        perturbation: Finite-difference step for the Jacobian
        executor: Optional executor for the Jacobian columns
        strict: Raise instead of returning an unconverged result

    Returns:
        NewtonResult with the residual-norm history

    Raises:
        ConvergenceError: If strict and the tolerance is not reached
    """
    point = np.atleast_1d(np.asarray(guess, dtype=float)).copy()
    current = np.atleast_1d(residual(point))
    history = [float(np.linalg.norm(current))]

    iterations = 0
    while history[-1] > tol and iterations < max_iter:
        jacobian = fd_jacobian(residual, point, current, perturbation, executor)
        point = point + np.linalg.solve(jacobian, -current)
        current = np.atleast_1d(residual(point))
        history.append(float(np.linalg.norm(current)))
        iterations += 1
        logger.debug("Newton iteration %d: residual norm %.3e", iterations, history[-1])

    converged = history[-1] <= tol
    if not converged and strict:
        raise ConvergenceError("Newton shooting did not converge", iterations, history[-1])
    return NewtonResult(solution=point, residual=current, iterations=iterations,
                        converged=converged, history=history)
