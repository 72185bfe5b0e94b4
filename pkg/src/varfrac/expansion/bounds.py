"""
A-priori truncation error bounds.

The bounds need L_j = max |x^(j)| over the integration range of the
operator ([a, t] on the left, [t, b] on the right). The maximum is
estimated by dense equispaced sampling, which can only under-estimate
it; raise ``samples`` for functions with sharp peaks.
"""

import math
import warnings

import numpy as np

from varfrac.expansion.params import ExpansionParams, Side
from varfrac.operators.functions import SmoothFunction
from varfrac.specfun import OrderFunction, gamma

DEFAULT_SAMPLES = 1001


def sup_norm(x: SmoothFunction, order: int, lower: float, upper: float,
             samples: int = DEFAULT_SAMPLES) -> float:
    """Sampled max |x^(order)| on [lower, upper]."""
    x.require_order(order)
    grid = np.linspace(lower, upper, samples)
    values = np.vectorize(x.derivs[order], otypes=[float])(grid)
    return float(np.max(np.abs(values)))


def _range(x: SmoothFunction, t: float, side: Side):
    return (x.a, t) if side is Side.LEFT else (t, x.b)


def _span(x: SmoothFunction, t: float, side: Side) -> float:
    return t - x.a if side is Side.LEFT else x.b - t


def _decay_factor(exponent: float, N: int) -> float:
    # exp(e² + e) / (Γ(n+1∓α) · e · N^e) with e = n ∓ α
    return math.exp(exponent ** 2 + exponent) / (exponent * N ** exponent)


def bound_e1(x: SmoothFunction, order: OrderFunction, params: ExpansionParams, t: float,
             side: Side = Side.LEFT, samples: int = DEFAULT_SAMPLES) -> float:
    """
    Bound on the S1 truncation error of the derivative expansions.

    L_{n+1}·exp((n-α)²+n-α)/(Γ(n+1-α)(n-α)N^(n-α))·span^(n+1-α).

    Warns when n <= α somewhere on the range; returns inf when n <= α(t),
    where the bound does not decay.
    """
    n, N = params.n, params.N
    lower, upper = _range(x, t, side)
    alpha = order(t)
    peak_order = max(order(s) for s in np.linspace(lower, upper, 101))
    if n <= peak_order:
        warnings.warn(f"Error bound with n={n} <= alpha (max {peak_order:.4g} on "
                      f"[{lower:.4g}, {upper:.4g}]) does not decay in N", UserWarning)
    if n - alpha <= 0.0:
        return math.inf

    peak = sup_norm(x, n + 1, lower, upper, samples)
    if peak == 0.0:
        return 0.0
    exponent = n - alpha
    span = _span(x, t, side)
    return peak * _decay_factor(exponent, N) / gamma(n + 1 - alpha) * span ** (n + 1 - alpha)


def bound_e2(x: SmoothFunction, order: OrderFunction, params: ExpansionParams, t: float,
             side: Side = Side.LEFT, samples: int = DEFAULT_SAMPLES) -> float:
    """
    Bound on the S2 truncation error of the Riemann–Liouville expansions.

    L_1|α'|span^(2-α)exp(α²-α)/(Γ(2-α)N^(1-α))·[|ln span| + 1/N]. Grows
    without limit as span -> 0 through the logarithm.
    """
    slope = abs(order.deriv(t))
    if slope == 0.0:
        return 0.0
    N = params.N
    alpha = order(t)
    lower, upper = _range(x, t, side)
    span = _span(x, t, side)
    peak = sup_norm(x, 1, lower, upper, samples)
    return (peak * slope * span ** (2.0 - alpha) * math.exp(alpha ** 2 - alpha)
            / (gamma(2.0 - alpha) * N ** (1.0 - alpha))
            * (abs(math.log(span)) + 1.0 / N))


def bound_en_integral(x: SmoothFunction, order: OrderFunction, params: ExpansionParams,
                      t: float, samples: int = DEFAULT_SAMPLES) -> float:
    """
    Bound on the left integral expansion error.

    L_{n+1}·exp((n+α)²+n+α)/(Γ(n+1+α)(n+α)N^(n+α))·(t-a)^(n+1+α).
    """
    n, N = params.n, params.N
    alpha = order(t)
    peak = sup_norm(x, n + 1, x.a, t, samples)
    if peak == 0.0:
        return 0.0
    exponent = n + alpha
    return (peak * _decay_factor(exponent, N) / gamma(n + 1 + alpha)
            * (t - x.a) ** (n + 1 + alpha))
