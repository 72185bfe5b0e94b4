"""
Tests for Newton's method with finite-difference Jacobians.
"""

import unittest

import numpy as np
import pytest

from varfrac.exceptions import ConvergenceError
from varfrac.execution import GridExecutor
from varfrac.solvers import fd_jacobian, newton_solve


def _residual(point):
    x, y = point
    return np.array([x ** 2 + y ** 2 - 4.0, x - y])


@pytest.mark.unit
class TestNewton(unittest.TestCase):
    """Newton iteration."""

    def test_converges(self):
        result = newton_solve(_residual, [1.0, 0.5], tol=1e-10)
        self.assertTrue(result.converged)
        np.testing.assert_allclose(result.solution, [np.sqrt(2.0)] * 2, atol=1e-8)
        self.assertLessEqual(result.residual_norm, 1e-10)
        self.assertEqual(len(result.history), result.iterations + 1)

    def test_linear_problem_in_one_step(self):
        result = newton_solve(lambda p: 3.0 * p - 6.0, [0.0], tol=1e-8)
        self.assertEqual(result.iterations, 1)
        self.assertAlmostEqual(result.solution[0], 2.0, delta=1e-6)

    def test_already_converged(self):
        result = newton_solve(lambda p: p, [0.0])
        self.assertEqual(result.iterations, 0)
        self.assertTrue(result.converged)

    def test_budget_exhausted(self):
        with self.assertRaises(ConvergenceError) as ctx:
            newton_solve(_residual, [1.0, 0.5], tol=1e-14, max_iter=1)
        self.assertEqual(ctx.exception.iterations, 1)
        result = newton_solve(_residual, [1.0, 0.5], tol=1e-14, max_iter=1, strict=False)
        self.assertFalse(result.converged)


@pytest.mark.unit
class TestJacobian(unittest.TestCase):
    """Finite-difference Jacobian."""

    def test_matches_analytic(self):
        point = np.array([1.0, 2.0])
        jacobian = fd_jacobian(_residual, point, _residual(point), perturbation=1e-7)
        np.testing.assert_allclose(jacobian, [[2.0, 4.0], [1.0, -1.0]], atol=1e-5)

    def test_executor_gives_same_columns(self):
        point = np.array([1.0, 2.0])
        base = _residual(point)
        serial = fd_jacobian(_residual, point, base)
        parallel = fd_jacobian(_residual, point, base, executor=GridExecutor(max_workers=2))
        np.testing.assert_array_equal(serial, parallel)
