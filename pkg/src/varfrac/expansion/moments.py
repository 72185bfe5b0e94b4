"""
Moment functions.

V_k(t) = (k-n) ∫_a^t (τ-a)^(k-n-1) x(τ) dτ and the mirrored
W_k(t) = (k-n) ∫_t^b (b-τ)^(k-n-1) x(τ) dτ.

Both are computed on the unit interval after τ = a + (t-a)s (resp.
τ = b - (b-t)s), which keeps the quadrature relative: the expansions
multiply V_k by (t-a)^(n-k), so absolute tolerances on V_k alone would
be amplified near t = a.
"""

import logging
from functools import lru_cache

from scipy import integrate

from varfrac.exceptions import DomainError, QuadratureError
from varfrac.expansion.params import MomentVector, Side
from varfrac.operators.functions import SmoothFunction

logger = logging.getLogger(__name__)

_EPSABS = 1e-13
_EPSREL = 1e-12


@lru_cache(maxsize=65536)
def _unit_moment(x: SmoothFunction, anchor: float, direction: float, span: float,
                 power: int) -> float:
    """(power+1) ∫_0^1 s^power x(anchor + direction·span·s) ds."""
    func = x.derivs[0]
    value, error = integrate.quad(lambda s: s ** power * func(anchor + direction * span * s),
                                  0.0, 1.0, epsabs=_EPSABS, epsrel=_EPSREL, limit=200)
    if error > 1e-8 * max(1.0, abs(value)):
        raise QuadratureError(f"Moment of power {power} did not converge", error)
    return (power + 1) * value


def clear_moment_cache() -> None:
    """Drop cached moments (functions are cached by identity)."""
    _unit_moment.cache_clear()


def moments_left(x: SmoothFunction, a: float, t: float, n: int, k_max: int) -> MomentVector:
    """
    Left moments V_k(t) for k = n+1 .. k_max.

    Args:
        x: Function whose moments are taken
        a: Left end of the interval
        t: Evaluation time, t > a
        n: Expansion parameter n
        k_max: Highest moment order

    Returns:
        MomentVector on the left side

    Raises:
        DomainError: If t <= a or k_max < n + 1

    Example:
        >>> x = SmoothFunction.polynomial([0, 0, 0, 0, 1])
        >>> round(moments_left(x, 0.0, 1.0, 2, 3)[3], 12)
        0.2
    """
    if not t > a:
        raise DomainError(f"Left moments require t > a, got t={t}, a={a}")
    if k_max < n + 1:
        raise DomainError(f"Moments require k_max >= n + 1, got n={n}, k_max={k_max}")
    span = t - a
    values = {k: span ** (k - n) * _unit_moment(x, a, 1.0, span, k - n - 1)
              for k in range(n + 1, k_max + 1)}
    return MomentVector(Side.LEFT, n, t, values)


def moments_right(x: SmoothFunction, b: float, t: float, n: int, k_max: int) -> MomentVector:
    """
    Right moments W_k(t) for k = n+1 .. k_max.

    Raises:
        DomainError: If t >= b or k_max < n + 1
    """
    if not t < b:
        raise DomainError(f"Right moments require t < b, got t={t}, b={b}")
    if k_max < n + 1:
        raise DomainError(f"Moments require k_max >= n + 1, got n={n}, k_max={k_max}")
    span = b - t
    values = {k: span ** (k - n) * _unit_moment(x, b, -1.0, span, k - n - 1)
              for k in range(n + 1, k_max + 1)}
    return MomentVector(Side.RIGHT, n, t, values)
