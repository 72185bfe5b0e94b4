"""
Function containers consumed by the operators.

SmoothFunction carries x together with callable derivatives up to a
declared order; PowerFunction is the (t-a)^γ family with closed-form
fractional integrals and derivatives.
"""

from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from scipy.interpolate import CubicSpline

from varfrac.exceptions import DomainError, InsufficientDataError
from varfrac.specfun.order import Interval


@dataclass(frozen=True)
class SmoothFunction:
    """
    A function x(t) with derivatives x^(0), ..., x^(m) on [a, b].

    Attributes:
        derivs: Callables t -> x^(j)(t), j = 0..m (m >= 1)
        domain: Closed interval [a, b]
    """
    derivs: Tuple[Callable[[float], float], ...]
    domain: Interval = (0.0, 1.0)

    def __post_init__(self):
        object.__setattr__(self, 'derivs', tuple(self.derivs))
        if len(self.derivs) < 2:
            raise InsufficientDataError("SmoothFunction needs x and at least its first derivative")
        a, b = self.domain
        if not a < b:
            raise DomainError(f"Function domain must satisfy a < b, got {self.domain}")

    @property
    def max_order(self) -> int:
        return len(self.derivs) - 1

    @property
    def a(self) -> float:
        return self.domain[0]

    @property
    def b(self) -> float:
        return self.domain[1]

    def __call__(self, t: float) -> float:
        return float(self.derivs[0](t))

    def derivative(self, order: int, t: float) -> float:
        """Evaluate x^(order)(t)."""
        self.require_order(order)
        return float(self.derivs[order](t))

    def require_order(self, order: int) -> None:
        if order > self.max_order:
            raise InsufficientDataError(
                f"Derivative of order {order} requested but only {self.max_order} available"
            )

    def validate(self, samples: int = 21, tol: float = 1e-5, step: float = 1e-5) -> None:
        """
        Check each derivative against a central difference of the previous one.

        Raises:
            DomainError: On the first mismatch larger than tol
        """
        grid = np.linspace(self.a, self.b, samples)[1:-1]
        for order in range(1, self.max_order + 1):
            lower = self.derivs[order - 1]
            for t in grid:
                numeric = (lower(t + step) - lower(t - step)) / (2.0 * step)
                analytic = self.derivs[order](t)
                if abs(numeric - analytic) > tol * max(1.0, abs(analytic)):
                    raise DomainError(
                        f"Derivative {order} mismatch at t={t:.6g}: "
                        f"analytic {analytic:.6g}, central difference {numeric:.6g}"
                    )

    def reflected(self) -> 'SmoothFunction':
        """y(s) = x(a+b-s), so y^(k)(s) = (-1)^k x^(k)(a+b-s)."""
        a, b = self.domain

        def mirror(order: int) -> Callable[[float], float]:
            sign = -1.0 if order % 2 else 1.0
            func = self.derivs[order]
            return lambda s: sign * func(a + b - s)

        return SmoothFunction(tuple(mirror(k) for k in range(len(self.derivs))), self.domain)

    @classmethod
    def polynomial(cls, coefficients: Sequence[float], domain: Interval = (0.0, 1.0),
                   max_order: int = 4) -> 'SmoothFunction':
        """
        Polynomial in t with coefficients in increasing degree.

        Example:
            >>> SmoothFunction.polynomial([0, 0, 0, 0, 1]).derivative(3, 1.0)
            24.0
        """
        poly = Polynomial(coefficients)
        # Polynomial objects are unhashable; wrap them so the function can key caches.
        derivs = [(lambda t, p=poly.deriv(k): p(t)) for k in range(max_order + 1)]
        return cls(tuple(derivs), domain)

    @classmethod
    def constant(cls, value: float, domain: Interval = (0.0, 1.0),
                 max_order: int = 3) -> 'SmoothFunction':
        return cls.polynomial([value], domain, max_order)

    @classmethod
    def from_samples(cls, times: Sequence[float], values: Sequence[float],
                     domain: Interval = None) -> 'SmoothFunction':
        """
        Cubic-spline interpolant of sampled values with its first three derivatives.

        Args:
            times: Strictly increasing sample times
            values: Function values at the sample times
            domain: Interval of the result (defaults to the sample span)
        """
        spline = CubicSpline(np.asarray(times, dtype=float), np.asarray(values, dtype=float))
        derivs = [spline] + [spline.derivative(k) for k in (1, 2, 3)]
        span = domain or (float(times[0]), float(times[-1]))
        return cls(tuple(derivs), span)

    @classmethod
    def linear_combination(cls, terms: Sequence[Tuple[float, 'SmoothFunction']]) -> 'SmoothFunction':
        """Σ c_i x_i over functions sharing a domain; order is the smallest available."""
        if not terms:
            raise DomainError("linear_combination needs at least one term")
        domain = terms[0][1].domain
        order = min(func.max_order for _, func in terms)

        def combine(k: int) -> Callable[[float], float]:
            parts = [(coef, func.derivs[k]) for coef, func in terms]
            return lambda t: sum(coef * d(t) for coef, d in parts)

        return cls(tuple(combine(k) for k in range(order + 1)), domain)


@dataclass(frozen=True)
class PowerFunction:
    """
    x(t) = (t - a)^γ with γ > -1.

    Attributes:
        gamma_exp: The exponent γ
        a: Left anchor of the power
    """
    gamma_exp: float
    a: float = 0.0

    def __post_init__(self):
        if not self.gamma_exp > -1.0:
            raise DomainError(f"Power exponent must be > -1, got {self.gamma_exp}")

    def __call__(self, t: float) -> float:
        return float((t - self.a) ** self.gamma_exp)

    def as_smooth(self, b: float = 1.0, max_order: int = 4) -> SmoothFunction:
        """Same function as a SmoothFunction on [a, b] with derivatives up to max_order."""
        g = self.gamma_exp
        a = self.a

        def deriv(order: int) -> Callable[[float], float]:
            coef = 1.0
            for j in range(order):
                coef *= g - j
            if coef == 0.0:
                return lambda t: 0.0 * t
            return lambda t: coef * (t - a) ** (g - order)

        return SmoothFunction(tuple(deriv(k) for k in range(max_order + 1)), (a, b))
