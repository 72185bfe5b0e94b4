"""
Expansion coefficients.

The derivative coefficients depend on the order α; the integral ones are
the same expressions with α replaced by -α, so both families share the
private helpers below and only differ in the order they pass in.
"""

from varfrac.exceptions import DomainError
from varfrac.expansion.params import ExpansionParams
from varfrac.specfun import gamma_ratio


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"Order must lie in (0, 1), got {alpha}")


def _check_local_index(k: int, params: ExpansionParams) -> None:
    if not 0 <= k <= params.n:
        raise DomainError(f"Coefficient A requires 0 <= k <= n, got k={k}, n={params.n}")


def _check_moment_index(k: int, n: int) -> None:
    if k < n + 1:
        raise DomainError(f"Coefficient B requires k >= n + 1, got k={k}, n={n}")


def _coeff_a(order: float, k: int, n: int, N: int) -> float:
    # 1/Γ(k+1-ν) [1 + Σ_{p=n+1-k}^{N} Γ(p-n+ν) / (Γ(ν-k)(p-n+k)!)]
    total = 1.0
    for p in range(n + 1 - k, N + 1):
        total += gamma_ratio([p - n + order], [order - k, p - n + k + 1])
    return total * gamma_ratio([], [k + 1 - order])


def _coeff_b(order: float, k: int, n: int) -> float:
    # Γ(k-n+ν) / (Γ(-ν)Γ(1+ν)(k-n)!)
    return gamma_ratio([k - n + order], [-order, 1.0 + order, k - n + 1])


def coeff_a_deriv_left(alpha: float, k: int, params: ExpansionParams) -> float:
    """
    Coefficient A(α, k) of x^(k), k = 0..n, in the left derivative expansion.

    Example:
        >>> round(coeff_a_deriv_left(0.5, 0, ExpansionParams(1, 2)), 7)
        0.8462844
    """
    _check_alpha(alpha)
    _check_local_index(k, params)
    return _coeff_a(alpha, k, params.n, params.N)


def coeff_b_deriv_left(alpha: float, k: int, n: int) -> float:
    """Coefficient B(α, k) of the moment V_k, k >= n+1; always negative."""
    _check_alpha(alpha)
    _check_moment_index(k, n)
    return _coeff_b(alpha, k, n)


def coeff_a_right(alpha: float, k: int, params: ExpansionParams) -> float:
    """Right derivative coefficient: (-1)^k times the left one."""
    value = coeff_a_deriv_left(alpha, k, params)
    return -value if k % 2 else value


def coeff_b_right(alpha: float, k: int, n: int) -> float:
    """
    Right derivative coefficient of the moment W_k.

    Under τ -> a+b-τ the right moments become left moments of the
    reflected function while x^(k) picks up (-1)^k, so only A changes
    sign; B coincides with the left coefficient for every n.
    """
    return coeff_b_deriv_left(alpha, k, n)


def coeff_a_integral(alpha: float, k: int, params: ExpansionParams) -> float:
    """Left integral coefficient: 1/Γ(k+1+α)[1 + Σ Γ(p-n-α)/(Γ(-α-k)(p-n+k)!)]."""
    _check_alpha(alpha)
    _check_local_index(k, params)
    return _coeff_a(-alpha, k, params.n, params.N)


def coeff_b_integral(alpha: float, k: int, n: int) -> float:
    """Left integral coefficient: Γ(k-n-α)/(Γ(α)Γ(1-α)(k-n)!)."""
    _check_alpha(alpha)
    _check_moment_index(k, n)
    return _coeff_b(-alpha, k, n)
