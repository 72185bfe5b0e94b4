"""
Hardware detection for grid evaluation.

Worker counts are derived from the physical core count reported by psutil.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import psutil

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HardwareProfile:
    """Core counts of the current machine."""
    physical_cores: int
    logical_cores: int

    @classmethod
    def detect(cls) -> 'HardwareProfile':
        """
        Read core counts with psutil.

        psutil returns None for the physical count on some platforms; the
        logical count is used in that case.
        """
        logical = psutil.cpu_count(logical=True) or 1
        physical = psutil.cpu_count(logical=False) or logical
        logger.debug("Detected %d physical / %d logical cores", physical, logical)
        return cls(physical_cores=physical, logical_cores=logical)

    def calculate_optimal_workers(self, num_tasks: int, mode: str = 'auto',
                                  manual_workers: Optional[int] = None,
                                  cpu_reserve_cores: int = 1) -> int:
        """
        Worker count for a batch of independent tasks.

        Args:
            num_tasks: Number of grid points or integrations to run
            mode: 'auto' or 'manual'
            manual_workers: Worker count used when mode='manual'
            cpu_reserve_cores: Cores left free in auto mode

        Returns:
            At least 1, never more than num_tasks
        """
        if mode == 'manual' and manual_workers is not None:
            return max(1, min(manual_workers, max(1, num_tasks)))

        # Small batches are not worth the thread overhead
        if num_tasks <= 3:
            return 1

        max_by_cpu = max(1, self.physical_cores - cpu_reserve_cores)
        return max(1, min(max_by_cpu, num_tasks))
