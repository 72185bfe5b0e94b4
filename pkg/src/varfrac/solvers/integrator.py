"""
Fixed-step classical Runge–Kutta integration.

The reduced systems are singular at t = a with eigenvalues of size
κ/(t-a), κ up to ~10. Integration therefore starts at a + start_eps on
a geometrically graded mesh (h = start_ratio·(t-a)) that switches to the
fixed step once the graded step reaches it; from there the mesh lies on
multiples of the step measured from a.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

import numpy as np
import pandas as pd

from varfrac.exceptions import DomainError, NonFiniteStateError

logger = logging.getLogger(__name__)

Rhs = Callable[[float, np.ndarray], np.ndarray]

DEFAULT_START_RATIO = 0.05


@dataclass
class Trajectory:
    """
    Sampled solution of an ODE system.

    Attributes:
        times: Mesh times, increasing
        states: Array of shape (len(times), len(labels))
        labels: Column names of the state components
    """
    times: np.ndarray
    states: np.ndarray
    labels: Tuple[str, ...]

    def column(self, label: str) -> np.ndarray:
        """Values of one state component along the mesh."""
        try:
            return self.states[:, self.labels.index(label)]
        except ValueError:
            raise KeyError(f"Unknown trajectory column '{label}'. "
                           f"Available columns: {', '.join(self.labels)}") from None

    @property
    def x(self) -> np.ndarray:
        return self.states[:, 0]

    def sample(self, times: Sequence[float], label: str = 'x') -> np.ndarray:
        """Linear interpolation of one component at arbitrary times inside the mesh."""
        return np.interp(np.asarray(times, dtype=float), self.times, self.column(label))

    def to_frame(self) -> pd.DataFrame:
        """Trajectory as a DataFrame with a leading 't' column."""
        frame = pd.DataFrame(self.states, columns=list(self.labels))
        frame.insert(0, 't', self.times)
        return frame


def graded_mesh(anchor: float, start_eps: float, horizon: float, step: float,
                start_ratio: float = DEFAULT_START_RATIO) -> np.ndarray:
    """
    Mesh from anchor + start_eps to horizon.

    Args:
        anchor: Singular point a
        start_eps: Offset of the first mesh point from a
        horizon: Last mesh point
        step: Fixed step used away from a
        start_ratio: Graded steps are start_ratio·(t - a)

    Returns:
        Strictly increasing mesh including both ends

    Example:
        >>> mesh = graded_mesh(0.0, 1e-6, 1.0, 1e-3)
        >>> bool(mesh[0] == 1e-6 and mesh[-1] == 1.0)
        True
    """
    if not start_eps > 0.0 or not step > 0.0 or not 0.0 < start_ratio < 1.0:
        raise DomainError("graded_mesh requires start_eps > 0, step > 0 and 0 < start_ratio < 1")
    if not anchor + start_eps < horizon:
        raise DomainError(f"Horizon {horizon} must exceed a + start_eps = {anchor + start_eps}")

    points = [anchor + start_eps]
    t = points[0]
    while start_ratio * (t - anchor) < step:
        t = t + start_ratio * (t - anchor)
        if t >= horizon:
            break
        points.append(t)

    first = math.floor((points[-1] - anchor) / step) + 1
    if anchor + first * step - points[-1] < 1e-3 * step:
        first += 1
    last = math.floor((horizon - anchor) / step + 1e-9)
    uniform = anchor + step * np.arange(first, last + 1)
    mesh = np.concatenate([np.asarray(points), uniform[uniform < horizon]])
    if horizon - mesh[-1] < 1e-9 * step:
        mesh = mesh[:-1]
    return np.append(mesh, horizon)


def rk4_step(rhs: Rhs, t: float, y: np.ndarray, h: float) -> np.ndarray:
    """One classical fourth-order Runge–Kutta step (h may be negative)."""
    k1 = rhs(t, y)
    k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1)
    k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2)
    k4 = rhs(t + h, y + h * k3)
    return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def rk4_integrate(rhs: Rhs, mesh: np.ndarray, y0: Sequence[float]) -> np.ndarray:
    """
    Integrate along a mesh (increasing or decreasing).

    Returns:
        States at every mesh point, shape (len(mesh), len(y0))

    Raises:
        NonFiniteStateError: At the first mesh point with a non-finite state
    """
    y = np.asarray(y0, dtype=float)
    states = np.empty((len(mesh), y.size))
    states[0] = y
    for i in range(1, len(mesh)):
        y = rk4_step(rhs, mesh[i - 1], y, mesh[i] - mesh[i - 1])
        if not np.all(np.isfinite(y)):
            raise NonFiniteStateError(float(mesh[i]))
        states[i] = y
    logger.debug("RK4 integrated %d steps from t=%g to t=%g", len(mesh) - 1, mesh[0], mesh[-1])
    return states
