"""
Order-function abstraction.

An OrderFunction bundles α(t) with its derivative α'(t) on a closed
interval. All operators evaluate the order pointwise; the derivative is
only needed by the Riemann–Liouville S2 correction and its error bound.
"""

from dataclasses import dataclass, field
from typing import Callable, Tuple

import numpy as np

from varfrac.exceptions import DomainError, OrderRangeError

Interval = Tuple[float, float]

DEFAULT_DIFF_STEP = 1e-6


def _zero(t: float) -> float:
    return 0.0


@dataclass(frozen=True)
class OrderFunction:
    """
    Variable order α(t) in (0, 1) with its first derivative.

    Attributes:
        func: t -> α(t)
        derivative: t -> α'(t)
        domain: Closed interval [a, b] on which the order is used
        is_constant: True when built by ``constant``; α' is then exactly 0
    """
    func: Callable[[float], float]
    derivative: Callable[[float], float]
    domain: Interval = (0.0, 1.0)
    is_constant: bool = field(default=False)

    def __post_init__(self):
        a, b = self.domain
        if not a < b:
            raise DomainError(f"Order domain must satisfy a < b, got {self.domain}")

    def __call__(self, t: float) -> float:
        return float(self.func(t))

    def deriv(self, t: float) -> float:
        """Evaluate α'(t)."""
        return float(self.derivative(t))

    @classmethod
    def constant(cls, value: float, domain: Interval = (0.0, 1.0)) -> 'OrderFunction':
        """Constant order; its derivative is identically zero."""
        if not 0.0 < value < 1.0:
            raise OrderRangeError(f"Constant order must lie in (0, 1), got {value}")
        return cls(func=lambda t: value, derivative=_zero, domain=domain, is_constant=True)

    @classmethod
    def from_closed_form(cls, func: Callable[[float], float],
                         derivative: Callable[[float], float],
                         domain: Interval = (0.0, 1.0)) -> 'OrderFunction':
        """Order from an explicit (α, α') pair."""
        return cls(func=func, derivative=derivative, domain=domain)

    @classmethod
    def from_eval(cls, func: Callable[[float], float], domain: Interval = (0.0, 1.0),
                  step: float = DEFAULT_DIFF_STEP) -> 'OrderFunction':
        """
        Order from α alone; α' by central difference.

        Near the ends of the domain the stencil is shifted inward so α is
        never sampled outside [a, b].
        """
        a, b = domain

        def derivative(t: float) -> float:
            lo = max(a, t - step)
            hi = min(b, t + step)
            return (func(hi) - func(lo)) / (hi - lo)

        return cls(func=func, derivative=derivative, domain=domain)

    def shifted(self, beta: float) -> 'OrderFunction':
        """Order t -> α(t) + β for a constant β (same derivative)."""
        return OrderFunction(func=lambda t: self.func(t) + beta, derivative=self.derivative,
                             domain=self.domain, is_constant=self.is_constant)

    def reflected(self) -> 'OrderFunction':
        """Order s -> α(a+b-s), used to map right operators onto left ones."""
        a, b = self.domain
        if self.is_constant:
            return OrderFunction(func=lambda s: self.func(a + b - s), derivative=_zero,
                                 domain=self.domain, is_constant=True)
        return OrderFunction(func=lambda s: self.func(a + b - s),
                             derivative=lambda s: -self.derivative(a + b - s),
                             domain=self.domain)

    def validate(self, samples: int = 101, derivative_tol: float = 1e-6,
                 diff_step: float = 1e-5) -> None:
        """
        Check the order stays in (0, 1) and α' matches α.

        Args:
            samples: Number of equispaced sample points on the domain
            derivative_tol: Allowed gap between α' and a central difference
            diff_step: Finite-difference step for the consistency check

        Raises:
            OrderRangeError: If a sample of α falls outside (0, 1)
            DomainError: If α' disagrees with the central difference
        """
        a, b = self.domain
        grid = np.linspace(a, b, samples)
        for t in grid:
            value = self(t)
            if not 0.0 < value < 1.0:
                raise OrderRangeError(f"Order alpha({t:.6g})={value:.6g} is outside (0, 1)")

        for t in grid[1:-1]:
            h = min(diff_step, t - a, b - t)
            numeric = (self(t + h) - self(t - h)) / (2.0 * h)
            if abs(numeric - self.deriv(t)) > derivative_tol:
                raise DomainError(
                    f"Order derivative mismatch at t={t:.6g}: "
                    f"analytic {self.deriv(t):.6g}, central difference {numeric:.6g}"
                )
