"""
Special functions.

Thin, pole-aware wrappers over scipy.special used by every operator:
Γ (including negative non-integer arguments), ψ, the signed generalized
binomial coefficient and products/quotients of Γ values evaluated in
log space with sign tracking.
"""

import math
from typing import Iterable

import numpy as np
from scipy import special

from varfrac.exceptions import PoleError, DomainError

# Direct Γ products stay well inside float range below this argument size.
_DIRECT_GAMMA_LIMIT = 50.0
_DIRECT_BINOM_LIMIT = 20


def _is_pole(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def gamma(x: float) -> float:
    """
    Evaluate Γ(x).

    Negative non-integer arguments are supported; scipy applies the
    reflection identity so the sign is correct.

    Args:
        x: Real argument, not a non-positive integer

    Returns:
        Γ(x)

    Raises:
        PoleError: If x is 0, -1, -2, ...

    Example:
        >>> round(gamma(0.5) ** 2, 12) == round(math.pi, 12)
        True
    """
    if _is_pole(x):
        raise PoleError(f"Gamma has a pole at x={x}")
    return float(special.gamma(x))


def digamma(x: float) -> float:
    """
    Evaluate ψ(x) = Γ'(x)/Γ(x).

    Args:
        x: Real argument, not a non-positive integer

    Returns:
        ψ(x)

    Raises:
        PoleError: If x is 0, -1, -2, ...
    """
    if _is_pole(x):
        raise PoleError(f"Digamma has a pole at x={x}")
    return float(special.digamma(x))


def binom_signed(alpha: float, k: int) -> float:
    """
    Signed generalized binomial coefficient (-α choose k)(-1)^k.

    Equals Γ(α+k)/(Γ(α)·k!). Small k use the Γ ratio directly. Larger k
    continue from the k = 20 value in log space, adding log1p((α-1)/j) for
    j = 21..k, so consecutive terms keep the ratio (α+k)/(k+1) to a few
    ulp and the value stays finite for any k.

    Args:
        alpha: Order in (0, 1)
        k: Non-negative integer index

    Returns:
        The coefficient, always positive

    Raises:
        DomainError: If alpha is outside (0, 1) or k is negative
    """
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"binom_signed requires 0 < alpha < 1, got {alpha}")
    if k < 0:
        raise DomainError(f"binom_signed requires k >= 0, got {k}")
    if k == 0:
        return 1.0
    if k <= _DIRECT_BINOM_LIMIT:
        return float(special.gamma(alpha + k) / (special.gamma(alpha) * math.factorial(k)))
    head = special.gamma(alpha + _DIRECT_BINOM_LIMIT) / (
        special.gamma(alpha) * math.factorial(_DIRECT_BINOM_LIMIT))
    steps = np.arange(_DIRECT_BINOM_LIMIT + 1, k + 1, dtype=float)
    return float(head * np.exp(np.sum(np.log1p((alpha - 1.0) / steps))))


def gamma_ratio(numerator: Iterable[float], denominator: Iterable[float]) -> float:
    """
    Evaluate ΠΓ(numerator) / ΠΓ(denominator).

    Arguments may be negative non-integers. Large arguments are combined
    through log|Γ| with the sign tracked separately, so intermediate
    factorials never overflow.

    Args:
        numerator: Γ arguments in the numerator
        denominator: Γ arguments in the denominator

    Returns:
        The signed ratio

    Raises:
        PoleError: If any argument is a non-positive integer
    """
    numerator = [float(v) for v in numerator]
    denominator = [float(v) for v in denominator]
    for value in numerator + denominator:
        if _is_pole(value):
            raise PoleError(f"Gamma has a pole at x={value}")

    if max((abs(v) for v in numerator + denominator), default=0.0) <= _DIRECT_GAMMA_LIMIT:
        result = 1.0
        for value in numerator:
            result *= special.gamma(value)
        for value in denominator:
            result /= special.gamma(value)
        return float(result)

    sign = 1.0
    log_magnitude = 0.0
    for value in numerator:
        sign *= special.gammasgn(value)
        log_magnitude += special.gammaln(value)
    for value in denominator:
        sign *= special.gammasgn(value)
        log_magnitude -= special.gammaln(value)
    return float(sign * math.exp(log_magnitude))
