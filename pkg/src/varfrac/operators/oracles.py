"""
Quadrature oracles for the variable-order operators.

Ground-truth values of the six operators for general smooth functions.
The order is frozen at the evaluation point t, so every operator is a
weakly singular integral over [a, t] or [t, b]; the singular kernel is
handed to the quadrature weight.

Derivatives use the integration-by-parts split: a boundary term plus the
kernel applied to x'. The Riemann–Liouville derivatives add the
logarithmic term produced by differentiating (t-τ)^(-α(t)).
"""

import logging

from varfrac.exceptions import CrossCheckError, DomainError
from varfrac.operators.functions import SmoothFunction
from varfrac.operators.quadrature import weighted_quad
from varfrac.specfun import OrderFunction, gamma

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-8
CROSS_CHECK_FACTOR = 10.0


def _check_left(x: SmoothFunction, t: float) -> None:
    if not x.a < t <= x.b:
        raise DomainError(f"Left operator requires a < t <= b, got t={t} on {x.domain}")


def _check_right(x: SmoothFunction, t: float) -> None:
    if not x.a <= t < x.b:
        raise DomainError(f"Right operator requires a <= t < b, got t={t} on {x.domain}")


def oracle_left_integral(x: SmoothFunction, order: OrderFunction, t: float,
                         tol: float = DEFAULT_TOL) -> float:
    """(1/Γ(α)) ∫_a^t (t-τ)^(α-1) x(τ) dτ with α = α(t)."""
    _check_left(x, t)
    alpha = order(t)
    result = weighted_quad(x.derivs[0], x.a, t, upper_exponent=alpha - 1.0, tol=tol)
    return result.value / gamma(alpha)


def oracle_right_integral(x: SmoothFunction, order: OrderFunction, t: float,
                          tol: float = DEFAULT_TOL) -> float:
    """(1/Γ(α)) ∫_t^b (τ-t)^(α-1) x(τ) dτ with α = α(t)."""
    _check_right(x, t)
    alpha = order(t)
    result = weighted_quad(x.derivs[0], t, x.b, lower_exponent=alpha - 1.0, tol=tol)
    return result.value / gamma(alpha)


def _left_marchaud_split(x: SmoothFunction, alpha: float, t: float, tol: float) -> float:
    kernel = weighted_quad(x.derivs[1], x.a, t, upper_exponent=-alpha, tol=tol)
    boundary = x(x.a) * (t - x.a) ** (-alpha)
    return (boundary + kernel.value) / gamma(1.0 - alpha)


def _left_log_term(x: SmoothFunction, order: OrderFunction, t: float, tol: float) -> float:
    alpha = order(t)
    result = weighted_quad(x.derivs[0], x.a, t, upper_exponent=-alpha, log_at='upper', tol=tol)
    return order.deriv(t) * result.value / gamma(1.0 - alpha)


def oracle_left_marchaud_quotient(x: SmoothFunction, order: OrderFunction, t: float,
                                  tol: float = DEFAULT_TOL) -> float:
    """
    Difference-quotient form of the left Marchaud derivative.

    x(t)/(Γ(1-α)(t-a)^α) + α/Γ(1-α) ∫_a^t (x(t)-x(τ))/(t-τ)^(1+α) dτ.
    The quotient (x(t)-x(τ))/(t-τ) is integrated against (t-τ)^(-α) and
    continued by x'(t) at τ = t.
    """
    _check_left(x, t)
    alpha = order(t)
    xt = x(t)
    slope = x.derivative(1, t)
    span = t - x.a

    def quotient(tau: float) -> float:
        gap = t - tau
        if gap <= 1e-13 * span:
            return slope
        return (xt - x.derivs[0](tau)) / gap

    kernel = weighted_quad(quotient, x.a, t, upper_exponent=-alpha, tol=tol)
    return (xt * span ** (-alpha) + alpha * kernel.value) / gamma(1.0 - alpha)


def oracle_left_marchaud(x: SmoothFunction, order: OrderFunction, t: float,
                         tol: float = DEFAULT_TOL) -> float:
    """
    Left Marchaud derivative, (1/Γ(1-α))[x(a)(t-a)^(-α) + ∫_a^t (t-τ)^(-α) x'(τ) dτ].

    Cross-checked against the difference-quotient form.

    Raises:
        CrossCheckError: If the two forms differ by more than 10·tol
    """
    _check_left(x, t)
    value = _left_marchaud_split(x, order(t), t, tol)
    check = oracle_left_marchaud_quotient(x, order, t, tol)
    if abs(value - check) > CROSS_CHECK_FACTOR * tol:
        raise CrossCheckError(
            f"Marchaud forms disagree at t={t:.6g}: split {value:.17g}, quotient {check:.17g}"
        )
    return value


def oracle_left_rl_derivative(x: SmoothFunction, order: OrderFunction, t: float,
                              tol: float = DEFAULT_TOL) -> float:
    """
    Left Riemann–Liouville derivative as S1_int - S2_int.

    S1_int is the Marchaud split; S2_int = α'/Γ(1-α) ∫_a^t (t-τ)^(-α) ln(t-τ) x(τ) dτ
    and vanishes identically for constant order.
    """
    _check_left(x, t)
    value = _left_marchaud_split(x, order(t), t, tol)
    if order.deriv(t) == 0.0:
        return value
    return value - _left_log_term(x, order, t, tol)


def oracle_right_marchaud(x: SmoothFunction, order: OrderFunction, t: float,
                          tol: float = DEFAULT_TOL) -> float:
    """(1/Γ(1-α))[x(b)(b-t)^(-α) - ∫_t^b (τ-t)^(-α) x'(τ) dτ]."""
    _check_right(x, t)
    alpha = order(t)
    kernel = weighted_quad(x.derivs[1], t, x.b, lower_exponent=-alpha, tol=tol)
    boundary = x(x.b) * (x.b - t) ** (-alpha)
    return (boundary - kernel.value) / gamma(1.0 - alpha)


def oracle_right_rl_derivative(x: SmoothFunction, order: OrderFunction, t: float,
                               tol: float = DEFAULT_TOL) -> float:
    """Right Marchaud value plus α'/Γ(1-α) ∫_t^b (τ-t)^(-α) ln(τ-t) x(τ) dτ."""
    value = oracle_right_marchaud(x, order, t, tol)
    slope = order.deriv(t)
    if slope == 0.0:
        return value
    alpha = order(t)
    log_term = weighted_quad(x.derivs[0], t, x.b, lower_exponent=-alpha, log_at='lower', tol=tol)
    return value + slope * log_term.value / gamma(1.0 - alpha)


__all__ = [
    'oracle_left_integral',
    'oracle_right_integral',
    'oracle_left_marchaud',
    'oracle_left_marchaud_quotient',
    'oracle_left_rl_derivative',
    'oracle_right_marchaud',
    'oracle_right_rl_derivative',
]
