"""
Closed-form variable-order operators of power functions.

For x(t) = (t-a)^γ the left integral and left Marchaud derivative are
single Γ ratios; the left Riemann–Liouville derivative adds a ψ-based
correction proportional to α'(t).
"""

import math

from varfrac.exceptions import DomainError
from varfrac.operators.functions import PowerFunction
from varfrac.specfun import OrderFunction, gamma, digamma, gamma_ratio


def _check_after_anchor(p: PowerFunction, t: float) -> float:
    if not t > p.a:
        raise DomainError(f"Closed form requires t > a, got t={t}, a={p.a}")
    return t - p.a


def power_left_integral(p: PowerFunction, order: OrderFunction, t: float) -> float:
    """Γ(γ+1)/Γ(γ+α+1)·(t-a)^(γ+α)."""
    span = _check_after_anchor(p, t)
    alpha = order(t)
    g = p.gamma_exp
    return gamma_ratio([g + 1.0], [g + alpha + 1.0]) * span ** (g + alpha)


def power_left_marchaud(p: PowerFunction, order: OrderFunction, t: float) -> float:
    """Γ(γ+1)/Γ(γ-α+1)·(t-a)^(γ-α)."""
    span = _check_after_anchor(p, t)
    alpha = order(t)
    g = p.gamma_exp
    return gamma_ratio([g + 1.0], [g - alpha + 1.0]) * span ** (g - alpha)


def power_left_rl_derivative(p: PowerFunction, order: OrderFunction, t: float) -> float:
    """
    Left Riemann–Liouville derivative of (t-a)^γ.

    The Marchaud value minus
    α'·Γ(γ+1)/Γ(γ-α+2)·(t-a)^(γ-α+1)·[ln(t-a) - ψ(γ-α+2) + ψ(1-α)].
    """
    marchaud = power_left_marchaud(p, order, t)
    slope = order.deriv(t)
    if slope == 0.0:
        return marchaud

    span = t - p.a
    alpha = order(t)
    g = p.gamma_exp
    bracket = math.log(span) - digamma(g - alpha + 2.0) + digamma(1.0 - alpha)
    correction = slope * gamma(g + 1.0) / gamma(g - alpha + 2.0) * span ** (g - alpha + 1.0) * bracket
    return marchaud - correction
