"""
Expansion approximations of the variable-order operators.

Each operator is replaced by a finite sum of integer derivatives of x at
t and moments of x. With span = t-a (left) or b-t (right) and α = α(t):

    S1 = span^(-α) [Σ_{k=0}^{n} A_k span^k x^(k)(t) + Σ_{k=n+1}^{N} B_k span^(n-k) M_k]

where M_k are the moments V_k or W_k. The integral uses the same shape
with span^(+α) and the integral coefficients. The Riemann–Liouville
derivatives add S2, which carries α'(t) and vanishes for constant order.
"""

import logging
import math
from typing import Callable, Optional

from varfrac.expansion.bounds import bound_e1, bound_e2, bound_en_integral
from varfrac.expansion.coefficients import (
    coeff_a_deriv_left,
    coeff_b_deriv_left,
    coeff_a_right,
    coeff_b_right,
    coeff_a_integral,
    coeff_b_integral,
)
from varfrac.expansion.moments import moments_left, moments_right
from varfrac.expansion.params import ApproxReport, ExpansionParams, MomentVector, Side
from varfrac.exceptions import DomainError
from varfrac.operators.functions import SmoothFunction
from varfrac.specfun import OrderFunction, binom_signed, gamma

logger = logging.getLogger(__name__)

CoeffA = Callable[[float, int, ExpansionParams], float]
CoeffB = Callable[[float, int, int], float]


def _span(x: SmoothFunction, t: float, side: Side) -> float:
    if side is Side.LEFT:
        if not x.a < t <= x.b:
            raise DomainError(f"Left expansion requires a < t <= b, got t={t} on {x.domain}")
        return t - x.a
    if not x.a <= t < x.b:
        raise DomainError(f"Right expansion requires a <= t < b, got t={t} on {x.domain}")
    return x.b - t


def _expansion_sum(x: SmoothFunction, alpha: float, params: ExpansionParams, t: float,
                   moments: MomentVector, span: float, coeff_a: CoeffA, coeff_b: CoeffB) -> float:
    n, N = params.n, params.N
    x.require_order(n)
    moments.require(N)
    local = sum(coeff_a(alpha, k, params) * span ** k * x.derivative(k, t) for k in range(n + 1))
    history = sum(coeff_b(alpha, k, n) * span ** (n - k) * moments[k] for k in range(n + 1, N + 1))
    return local + history


def _s1(x, order, params, t, moments, side, coeff_a, coeff_b) -> float:
    span = _span(x, t, side)
    alpha = order(t)
    return span ** (-alpha) * _expansion_sum(x, alpha, params, t, moments, span, coeff_a, coeff_b)


def _s2(x: SmoothFunction, order: OrderFunction, params: ExpansionParams, t: float,
        moments: MomentVector, side: Side) -> float:
    slope = order.deriv(t)
    if slope == 0.0:
        return 0.0

    n, N = params.n, params.N
    moments.require(params.rl_moment_count)
    span = _span(x, t, side)
    alpha = order(t)
    log_span = math.log(span)
    c = [binom_signed(alpha, k) for k in range(N + 1)]

    # Terms proportional to x(t); the inner p-sum runs 1..N independently of k.
    local = (log_span / (1.0 - alpha)
             - 1.0 / (1.0 - alpha) ** 2
             - log_span * sum(c[k] / (k + 1) for k in range(N + 1))
             + sum(c[k] * sum(1.0 / (p * (k + p + 1)) for p in range(1, N + 1))
                   for k in range(N + 1)))

    history = 0.0
    for k in range(n + 1, N + n + 2):
        weight = c[k - n - 1]
        history += log_span * weight / (k - n) * span ** (n - k) * moments[k]
        history -= weight * sum(span ** (n - k - p) * moments[k + p] / (p * (k + p - n))
                                for p in range(1, N + 1))

    return slope / gamma(1.0 - alpha) * span ** (1.0 - alpha) * (x(t) * local + history)


def s1_left(x: SmoothFunction, order: OrderFunction, params: ExpansionParams, t: float,
            moments: MomentVector) -> float:
    """S1 of the left derivative expansions (moments V_n+1..V_N at least)."""
    return _s1(x, order, params, t, moments, Side.LEFT, coeff_a_deriv_left, coeff_b_deriv_left)


def s2_left(x: SmoothFunction, order: OrderFunction, params: ExpansionParams, t: float,
            moments: MomentVector) -> float:
    """S2 of the left Riemann–Liouville expansion; needs moments up to 2N+n+1."""
    return _s2(x, order, params, t, moments, Side.LEFT)


def s1_right(x: SmoothFunction, order: OrderFunction, params: ExpansionParams, t: float,
             moments: MomentVector) -> float:
    """S1 of the right derivative expansions with W moments and (b-t) powers."""
    return _s1(x, order, params, t, moments, Side.RIGHT, coeff_a_right, coeff_b_right)


def s2_right(x: SmoothFunction, order: OrderFunction, params: ExpansionParams, t: float,
             moments: MomentVector) -> float:
    """S2 of the right Riemann–Liouville expansion (enters with a plus sign)."""
    return _s2(x, order, params, t, moments, Side.RIGHT)


def _report(value: float, s1: float, s2: float, e1: Optional[Callable[[], float]],
            e2: Optional[Callable[[], float]]) -> ApproxReport:
    return ApproxReport(value=value, s1=s1, s2=s2,
                        bound_e1=e1() if e1 else 0.0,
                        bound_e2=e2() if e2 else 0.0)


def approx_left_rl_derivative(x: SmoothFunction, order: OrderFunction, params: ExpansionParams,
                              t: float, bounds: bool = True) -> ApproxReport:
    """
    Left Riemann–Liouville derivative, S1 - S2.

    Args:
        x: Function with derivatives up to n (n+1 when bounds are requested)
        order: Order function
        params: Truncation parameters
        t: Evaluation time, a < t <= b
        bounds: Fill bound_e1 and bound_e2

    Returns:
        ApproxReport with value = s1 - s2
    """
    moments = moments_left(x, x.a, t, params.n, params.rl_moment_count)
    s1 = s1_left(x, order, params, t, moments)
    s2 = s2_left(x, order, params, t, moments)
    return _report(s1 - s2, s1, s2,
                   (lambda: bound_e1(x, order, params, t, Side.LEFT)) if bounds else None,
                   (lambda: bound_e2(x, order, params, t, Side.LEFT)) if bounds else None)


def approx_right_rl_derivative(x: SmoothFunction, order: OrderFunction, params: ExpansionParams,
                               t: float, bounds: bool = True) -> ApproxReport:
    """Right Riemann–Liouville derivative, S1 + S2, for a <= t < b."""
    moments = moments_right(x, x.b, t, params.n, params.rl_moment_count)
    s1 = s1_right(x, order, params, t, moments)
    s2 = s2_right(x, order, params, t, moments)
    return _report(s1 + s2, s1, s2,
                   (lambda: bound_e1(x, order, params, t, Side.RIGHT)) if bounds else None,
                   (lambda: bound_e2(x, order, params, t, Side.RIGHT)) if bounds else None)


def approx_left_marchaud(x: SmoothFunction, order: OrderFunction, params: ExpansionParams,
                         t: float, bounds: bool = True) -> ApproxReport:
    """Left Marchaud derivative, S1 alone."""
    moments = moments_left(x, x.a, t, params.n, params.N)
    s1 = s1_left(x, order, params, t, moments)
    return _report(s1, s1, 0.0,
                   (lambda: bound_e1(x, order, params, t, Side.LEFT)) if bounds else None, None)


def approx_right_marchaud(x: SmoothFunction, order: OrderFunction, params: ExpansionParams,
                          t: float, bounds: bool = True) -> ApproxReport:
    """Right Marchaud derivative, right S1 alone."""
    moments = moments_right(x, x.b, t, params.n, params.N)
    s1 = s1_right(x, order, params, t, moments)
    return _report(s1, s1, 0.0,
                   (lambda: bound_e1(x, order, params, t, Side.RIGHT)) if bounds else None, None)


def approx_left_integral(x: SmoothFunction, order: OrderFunction, params: ExpansionParams,
                         t: float, bounds: bool = True) -> ApproxReport:
    """
    Left Riemann–Liouville integral.

    (t-a)^α [Σ A_k (t-a)^k x^(k)(t) + Σ B_k (t-a)^(n-k) V_k] with the
    integral coefficients; the bound goes to bound_e1.
    """
    span = _span(x, t, Side.LEFT)
    alpha = order(t)
    moments = moments_left(x, x.a, t, params.n, params.N)
    s1 = span ** alpha * _expansion_sum(x, alpha, params, t, moments, span,
                                        coeff_a_integral, coeff_b_integral)
    return _report(s1, s1, 0.0,
                   (lambda: bound_en_integral(x, order, params, t)) if bounds else None, None)
