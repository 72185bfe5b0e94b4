"""
Tests for the graded mesh and the RK4 integrator.
"""

import unittest

import numpy as np
import pytest

from varfrac.exceptions import DomainError, NonFiniteStateError
from varfrac.solvers import Trajectory, graded_mesh, rk4_integrate, rk4_step


@pytest.mark.unit
class TestGradedMesh(unittest.TestCase):
    """Mesh construction."""

    def test_endpoints_and_monotonicity(self):
        mesh = graded_mesh(0.0, 1e-6, 1.0, 1e-3)
        self.assertEqual(mesh[0], 1e-6)
        self.assertEqual(mesh[-1], 1.0)
        self.assertTrue(np.all(np.diff(mesh) > 0.0))

    def test_graded_then_uniform(self):
        mesh = graded_mesh(0.0, 1e-6, 1.0, 1e-3, start_ratio=0.05)
        steps = np.diff(mesh)
        self.assertLessEqual(steps.max(), 1e-3 * (1.0 + 1e-9))
        # uniform tail sits on multiples of the step
        tail = mesh[-50:]
        np.testing.assert_allclose(tail / 1e-3, np.round(tail / 1e-3), atol=1e-6)
        # graded head grows geometrically
        np.testing.assert_allclose(steps[:10] / (mesh[:10] - 0.0), 0.05, rtol=1e-9)

    def test_shifted_anchor(self):
        mesh = graded_mesh(2.0, 1e-4, 3.0, 1e-2)
        self.assertAlmostEqual(mesh[0], 2.0001, places=12)
        self.assertEqual(mesh[-1], 3.0)

    def test_invalid_arguments(self):
        with self.assertRaises(DomainError):
            graded_mesh(0.0, 0.0, 1.0, 1e-3)
        with self.assertRaises(DomainError):
            graded_mesh(0.0, 1e-6, 1.0, 1e-3, start_ratio=1.5)
        with self.assertRaises(DomainError):
            graded_mesh(0.0, 2.0, 1.0, 1e-3)


@pytest.mark.unit
class TestRk4(unittest.TestCase):
    """Runge-Kutta integration."""

    def test_exponential_decay(self):
        mesh = np.linspace(0.0, 1.0, 101)
        states = rk4_integrate(lambda t, y: -y, mesh, [1.0])
        self.assertAlmostEqual(states[-1, 0], np.exp(-1.0), delta=1e-9)

    def test_single_step_is_fourth_order(self):
        errors = [abs(rk4_step(lambda t, y: -y, 0.0, np.array([1.0]), h)[0] - np.exp(-h))
                  for h in (0.1, 0.05)]
        self.assertAlmostEqual(errors[0] / errors[1], 32.0, delta=2.0)

    def test_backward_integration(self):
        mesh = np.linspace(1.0, 0.0, 51)
        states = rk4_integrate(lambda t, y: np.array([2.0 * t]), mesh, [1.0])
        self.assertAlmostEqual(states[-1, 0], 0.0, delta=1e-12)

    def test_non_finite_state(self):
        mesh = np.linspace(0.0, 1.0, 11)
        with self.assertRaises(NonFiniteStateError) as ctx:
            rk4_integrate(lambda t, y: y * np.nan if t > 0.55 else y, mesh, [1.0])
        self.assertAlmostEqual(ctx.exception.t, 0.6, places=12)


@pytest.mark.unit
class TestTrajectory(unittest.TestCase):
    """Trajectory container."""

    def setUp(self):
        times = np.array([0.0, 0.5, 1.0])
        states = np.column_stack([times, times ** 2])
        self.trajectory = Trajectory(times=times, states=states, labels=('x', 'V_2'))

    def test_columns(self):
        np.testing.assert_array_equal(self.trajectory.column('V_2'), [0.0, 0.25, 1.0])
        np.testing.assert_array_equal(self.trajectory.x, [0.0, 0.5, 1.0])
        with self.assertRaises(KeyError):
            self.trajectory.column('lambda_1')

    def test_sample(self):
        np.testing.assert_allclose(self.trajectory.sample([0.25, 0.75]), [0.25, 0.75])

    def test_to_frame(self):
        frame = self.trajectory.to_frame()
        self.assertEqual(list(frame.columns), ['t', 'x', 'V_2'])
        self.assertEqual(len(frame), 3)
