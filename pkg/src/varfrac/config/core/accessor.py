"""
Configuration accessor module.

Provides typed access to configuration sections.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np


@dataclass
class OperatorConfig:
    """Expansion parameters and oracle tolerance."""
    n: int
    N: List[int]
    tol: float
    bound_samples: int


@dataclass
class GridConfig:
    """Evaluation grid; the error norm is taken over t >= max(t_min, a + delta)."""
    t_min: float
    t_max: float
    points: int
    delta: float

    def times(self):
        return np.linspace(self.t_min, self.t_max, self.points)


@dataclass
class SolverConfig:
    """ODE integration and shooting settings."""
    start_eps: float
    step: float
    start_ratio: float
    newton_tol: float
    max_iter: int
    fd_perturbation: float
    fde_N: int
    varmin_N: int


@dataclass
class ParallelConfig:
    """Parallel execution settings."""
    mode: str  # 'auto' or 'manual'
    max_workers: Optional[int]
    cpu_reserve_cores: int


@dataclass
class RuntimeConfig:
    """Logging and progress display."""
    log_level: str
    progress: bool


class ConfigAccessor:
    """
    Typed access to configuration values, with defaults for optional keys.
    """

    def __init__(self, config: Dict[str, Any]):
        self.config = config

    def _section(self, name: str) -> Dict[str, Any]:
        return self.config.get(name, {}) or {}

    def get_operator_config(self) -> OperatorConfig:
        section = self._section('operators')
        sizes = section.get('N', [3, 5])
        if isinstance(sizes, int):
            sizes = [sizes]
        return OperatorConfig(
            n=int(section.get('n', 2)),
            N=[int(s) for s in sizes],
            tol=float(section.get('tol', 1e-8)),
            bound_samples=int(section.get('bound_samples', 1001)),
        )

    def get_grid_config(self) -> GridConfig:
        section = self._section('grid')
        return GridConfig(
            t_min=float(section.get('t_min', 1e-3)),
            t_max=float(section.get('t_max', 1.0)),
            points=int(section.get('points', 201)),
            delta=float(section.get('delta', 1e-3)),
        )

    def get_solver_config(self) -> SolverConfig:
        section = self._section('solvers')
        return SolverConfig(
            start_eps=float(section.get('start_eps', 1e-6)),
            step=float(section.get('step', 1e-3)),
            start_ratio=float(section.get('start_ratio', 0.05)),
            newton_tol=float(section.get('newton_tol', 1e-8)),
            max_iter=int(section.get('max_iter', 25)),
            fd_perturbation=float(section.get('fd_perturbation', 1e-6)),
            fde_N=int(section.get('fde_N', 3)),
            varmin_N=int(section.get('varmin_N', 2)),
        )

    def get_parallel_config(self) -> ParallelConfig:
        section = self._section('parallel')
        workers = section.get('max_workers')
        return ParallelConfig(
            mode=section.get('mode', 'auto'),
            max_workers=int(workers) if workers is not None else None,
            cpu_reserve_cores=int(section.get('cpu_reserve_cores', 1)),
        )

    def get_runtime_config(self) -> RuntimeConfig:
        section = self._section('runtime')
        return RuntimeConfig(
            log_level=str(section.get('log_level', 'INFO')).upper(),
            progress=bool(section.get('progress', False)),
        )
