"""
Ordered parallel map over independent grid points.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, Iterable, List, Optional

from tqdm import tqdm

from varfrac.execution.hardware import HardwareProfile

logger = logging.getLogger(__name__)


class GridExecutor:
    """
    Evaluates a function over independent items and returns results in
    input order.

    With one worker the items are evaluated sequentially in the calling
    thread. The first failure (in input order) is re-raised after all
    submitted tasks finish.
    """

    def __init__(self, max_workers: int = 1, progress: bool = False, description: str = 'grid'):
        self.max_workers = max(1, int(max_workers))
        self.progress = progress
        self.description = description

    @classmethod
    def from_config(cls, parallel_config, num_tasks: int, progress: bool = False,
                    profile: Optional[HardwareProfile] = None) -> 'GridExecutor':
        """Size an executor from a ParallelConfig section."""
        profile = profile or HardwareProfile.detect()
        workers = profile.calculate_optimal_workers(
            num_tasks,
            mode=parallel_config.mode,
            manual_workers=parallel_config.max_workers,
            cpu_reserve_cores=parallel_config.cpu_reserve_cores,
        )
        logger.info("Using %d worker(s) for %d task(s)", workers, num_tasks)
        return cls(max_workers=workers, progress=progress)

    def map_ordered(self, fn: Callable[[Any], Any], items: Iterable[Any]) -> List[Any]:
        items = list(items)
        bar = tqdm(total=len(items), desc=self.description, disable=not self.progress,
                   leave=False)
        try:
            if self.max_workers == 1:
                results = []
                for item in items:
                    results.append(fn(item))
                    bar.update(1)
                return results

            results: List[Any] = [None] * len(items)
            errors = {}
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                future_to_index = {executor.submit(fn, item): i for i, item in enumerate(items)}
                for future in as_completed(future_to_index):
                    index = future_to_index[future]
                    try:
                        results[index] = future.result()
                    except Exception as e:
                        errors[index] = e
                    bar.update(1)
            if errors:
                raise errors[min(errors)]
            return results
        finally:
            bar.close()
