"""
Numerical exceptions.

Every error raised by the library derives from VarFracError so callers
(the CLI in particular) can map failures to exit codes by class.
"""


class VarFracError(Exception):
    """Base class for all library errors."""
    pass


class DomainError(VarFracError, ValueError):
    """Raised when an argument lies outside an operation's domain."""
    pass


class PoleError(VarFracError, ValueError):
    """Raised when Γ or ψ is requested at a non-positive integer."""
    pass


class OrderRangeError(DomainError):
    """Raised when an order function leaves the open interval (0, 1)."""
    pass


class InsufficientDataError(DomainError):
    """Raised when too few moments or derivatives are available."""
    pass


class QuadratureError(VarFracError):
    """Raised when a quadrature does not reach its tolerance."""

    def __init__(self, message: str, estimate: float = float('nan')):
        super().__init__(f"{message} (achieved error estimate {estimate:.3e})")
        self.estimate = estimate


class CrossCheckError(VarFracError):
    """Raised when two independent evaluations of one quantity disagree."""
    pass


class ConvergenceError(VarFracError):
    """Raised when Newton shooting exhausts its iteration budget."""

    def __init__(self, message: str, iterations: int, residual_norm: float):
        super().__init__(f"{message} after {iterations} iterations "
                         f"(residual norm {residual_norm:.3e})")
        self.iterations = iterations
        self.residual_norm = residual_norm


class NonFiniteStateError(VarFracError):
    """Raised when an integrated state stops being finite."""

    def __init__(self, t: float):
        super().__init__(f"Non-finite state encountered at t={t:.17g}")
        self.t = t
