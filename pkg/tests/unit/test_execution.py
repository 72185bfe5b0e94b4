"""
Tests for worker sizing and the ordered grid executor.
"""

import threading
import time
import unittest

import pytest

from varfrac.config import ParallelConfig
from varfrac.execution import GridExecutor, HardwareProfile


@pytest.mark.unit
class TestHardwareProfile(unittest.TestCase):
    """Worker count calculation."""

    def setUp(self):
        self.profile = HardwareProfile(physical_cores=8, logical_cores=16)

    def test_detect(self):
        profile = HardwareProfile.detect()
        self.assertGreaterEqual(profile.physical_cores, 1)
        self.assertGreaterEqual(profile.logical_cores, 1)

    def test_auto_mode(self):
        self.assertEqual(self.profile.calculate_optimal_workers(100), 7)
        self.assertEqual(self.profile.calculate_optimal_workers(5), 5)
        self.assertEqual(self.profile.calculate_optimal_workers(3), 1)
        self.assertEqual(self.profile.calculate_optimal_workers(100, cpu_reserve_cores=0), 8)

    def test_manual_mode(self):
        self.assertEqual(self.profile.calculate_optimal_workers(100, 'manual', 3), 3)
        self.assertEqual(self.profile.calculate_optimal_workers(2, 'manual', 12), 2)
        self.assertEqual(self.profile.calculate_optimal_workers(100, 'manual', None), 7)


@pytest.mark.unit
class TestGridExecutor(unittest.TestCase):
    """Ordered mapping."""

    def test_sequential(self):
        self.assertEqual(GridExecutor().map_ordered(lambda v: v * v, range(5)), [0, 1, 4, 9, 16])

    @pytest.mark.parallel
    def test_parallel_preserves_order(self):
        def slow_square(v):
            time.sleep(0.01 * (5 - v))
            return v * v

        executor = GridExecutor(max_workers=4)
        self.assertEqual(executor.map_ordered(slow_square, range(5)), [0, 1, 4, 9, 16])

    @pytest.mark.parallel
    def test_parallel_uses_threads(self):
        seen = set()

        def record(v):
            seen.add(threading.get_ident())
            time.sleep(0.02)
            return v

        GridExecutor(max_workers=3).map_ordered(record, range(6))
        self.assertGreater(len(seen), 1)

    @pytest.mark.parallel
    def test_first_error_in_input_order(self):
        def fail(v):
            if v == 1:
                time.sleep(0.05)
                raise ValueError('first')
            if v == 3:
                raise KeyError('second')
            return v

        with self.assertRaises(ValueError):
            GridExecutor(max_workers=4).map_ordered(fail, range(5))

    def test_from_config(self):
        config = ParallelConfig(mode='manual', max_workers=2, cpu_reserve_cores=1)
        profile = HardwareProfile(physical_cores=4, logical_cores=8)
        executor = GridExecutor.from_config(config, num_tasks=10, profile=profile)
        self.assertEqual(executor.max_workers, 2)
