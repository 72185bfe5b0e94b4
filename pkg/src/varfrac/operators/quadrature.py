"""
Weakly singular quadrature.

Wraps QUADPACK's algebraic-logarithmic weights (scipy.integrate.quad with
``weight='alg'``/``'alg-loga'``/``'alg-logb'``) so kernels such as
(t-τ)^(-α) and (t-τ)^(-α)·ln(t-τ) are carried by the weight and the
remaining integrand is smooth.
"""

import logging
import warnings
from dataclasses import dataclass
from typing import Callable, Optional

from scipy import integrate

from varfrac.exceptions import QuadratureError

logger = logging.getLogger(__name__)

DEFAULT_LIMIT = 500


@dataclass(frozen=True)
class QuadResult:
    """Integral value with QUADPACK's achieved error estimate."""
    value: float
    error: float


def weighted_quad(func: Callable[[float], float], lower: float, upper: float, *,
                  lower_exponent: float = 0.0, upper_exponent: float = 0.0,
                  log_at: Optional[str] = None, tol: float = 1e-8,
                  limit: int = DEFAULT_LIMIT) -> QuadResult:
    """
    Integrate func(τ)·(τ-lower)^p·(upper-τ)^q·[log factor] over [lower, upper].

    Args:
        func: Smooth part of the integrand
        lower: Lower limit
        upper: Upper limit
        lower_exponent: Exponent p > -1 of (τ - lower)
        upper_exponent: Exponent q > -1 of (upper - τ)
        log_at: None, 'lower' for ln(τ-lower) or 'upper' for ln(upper-τ)
        tol: Absolute error tolerance
        limit: Maximum number of adaptive subintervals

    Returns:
        QuadResult with the value and error estimate

    Raises:
        QuadratureError: If QUADPACK stops early with an estimate above tol
    """
    if upper <= lower:
        return QuadResult(0.0, 0.0)

    options = dict(epsabs=tol, epsrel=0.0, limit=limit, full_output=1)
    if lower_exponent == 0.0 and upper_exponent == 0.0 and log_at is None:
        outcome = integrate.quad(func, lower, upper, **options)
    else:
        weight = {None: 'alg', 'lower': 'alg-loga', 'upper': 'alg-logb'}[log_at]
        outcome = integrate.quad(func, lower, upper, weight=weight,
                                 wvar=(lower_exponent, upper_exponent), **options)

    value, error = float(outcome[0]), float(outcome[1])
    # A message is appended to the output only when QUADPACK reports a problem.
    if len(outcome) > 3:
        if error > tol:
            raise QuadratureError(f"Quadrature on [{lower:.6g}, {upper:.6g}] did not converge: "
                                  f"{outcome[3]}", error)
        logger.debug("QUADPACK note on [%g, %g]: %s", lower, upper, outcome[3])
    elif error > tol:
        warnings.warn(f"Quadrature error estimate {error:.3e} exceeds tolerance {tol:.1e}",
                      UserWarning)
    return QuadResult(value, error)
