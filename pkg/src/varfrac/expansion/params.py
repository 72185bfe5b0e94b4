"""
Expansion data types.
"""

from dataclasses import dataclass, field, asdict
from enum import Enum
from typing import Any, Dict

from varfrac.exceptions import DomainError, InsufficientDataError


class Side(str, Enum):
    """Which end of the interval an operator integrates from."""
    LEFT = 'left'
    RIGHT = 'right'


@dataclass(frozen=True)
class ExpansionParams:
    """
    Truncation parameters of an expansion.

    Attributes:
        n: Highest integer derivative of x used (n >= 0)
        N: Truncation size (N >= n + 1)
    """
    n: int
    N: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"Expansion requires n >= 0, got n={self.n}")
        if self.N < self.n + 1:
            raise DomainError(f"Expansion requires N >= n + 1, got n={self.n}, N={self.N}")

    @property
    def rl_moment_count(self) -> int:
        """Highest moment index reached by the S2 double sum."""
        return 2 * self.N + self.n + 1


@dataclass(frozen=True)
class MomentVector:
    """
    Moments V_k (left) or W_k (right) for k = n+1 .. k_max at time t.
    """
    side: Side
    n: int
    t: float
    values: Dict[int, float] = field(default_factory=dict)

    @property
    def k_max(self) -> int:
        return max(self.values) if self.values else self.n

    def __getitem__(self, k: int) -> float:
        try:
            return self.values[k]
        except KeyError:
            raise InsufficientDataError(
                f"Moment of order {k} not available (have {self.n + 1}..{self.k_max})"
            ) from None

    def require(self, k_max: int) -> None:
        if self.k_max < k_max:
            raise InsufficientDataError(
                f"Moments up to order {k_max} required, only {self.k_max} computed"
            )


@dataclass
class ApproxReport:
    """
    Result of an expansion approximation.

    ``value`` is s1 - s2 for the left Riemann–Liouville derivative, s1 + s2
    for the right one and s1 otherwise. For the left integral the bound
    is stored in ``bound_e1``.
    """
    value: float
    s1: float
    s2: float = 0.0
    bound_e1: float = 0.0
    bound_e2: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        """Convert report to dictionary format."""
        return asdict(self)
