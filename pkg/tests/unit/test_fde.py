"""
Tests for the reduction of linear fractional equations.
"""

import unittest

import numpy as np
import pytest

from varfrac.exceptions import DomainError
from varfrac.expansion import ExpansionParams, coeff_a_deriv_left, coeff_b_deriv_left
from varfrac.solvers import LinearFdeProblem, fde_coefficients, reduce, solve_ivp
from varfrac.specfun import OrderFunction, gamma
from tests.support import linear_order


def _identity_state(t: float, N: int) -> np.ndarray:
    # x = t and V_k = (k-1)∫_0^t s^(k-1) ds
    return np.array([t] + [(k - 1) * t ** k / k for k in range(2, N + 1)])


@pytest.mark.unit
class TestFdeCoefficients(unittest.TestCase):
    """A, B and C_k of the reduced system."""

    def test_match_expansion_coefficients(self):
        for alpha in (0.2, 0.5, 0.8):
            for N in (2, 3, 6):
                params = ExpansionParams(1, N)
                big_a, big_b, big_c = fde_coefficients(alpha, N)
                self.assertAlmostEqual(big_a, coeff_a_deriv_left(alpha, 0, params), places=12)
                self.assertAlmostEqual(big_b, coeff_a_deriv_left(alpha, 1, params), places=12)
                for k, c in zip(range(2, N + 1), big_c):
                    self.assertAlmostEqual(c, coeff_b_deriv_left(alpha, k, 1), places=12)

    def test_c2_value(self):
        _, _, big_c = fde_coefficients(0.5, 3)
        self.assertAlmostEqual(big_c[0], -0.2820948, places=7)
        self.assertTrue(all(c < 0.0 for c in big_c))

    def test_domain(self):
        with self.assertRaises(DomainError):
            fde_coefficients(1.0, 3)
        with self.assertRaises(DomainError):
            fde_coefficients(0.5, 1)


@pytest.mark.unit
class TestReduction(unittest.TestCase):
    """Reduced ODE system."""

    def setUp(self):
        self.order = linear_order()
        source = lambda t: t ** (1.0 - self.order(t)) / gamma(2.0 - self.order(t))
        self.problem = LinearFdeProblem(order=self.order, source=source)

    def test_labels_and_initial_state(self):
        system = reduce(self.problem, 4)
        self.assertEqual(system.labels, ('x', 'V_2', 'V_3', 'V_4'))
        self.assertEqual(system.initial_state, (0.0, 0.0, 0.0, 0.0))
        self.assertEqual(system.state_dim, 4)

    def test_identity_is_a_solution(self):
        for N in (2, 3, 5):
            system = reduce(self.problem, N)
            for t in (0.05, 0.4, 1.0):
                derivative = system.rhs(t, _identity_state(t, N))
                self.assertAlmostEqual(derivative[0], 1.0, delta=1e-9)
                expected = [(k - 1) * t ** (k - 1) for k in range(2, N + 1)]
                np.testing.assert_allclose(derivative[1:], expected, rtol=1e-12)

    def test_singular_at_a(self):
        system = reduce(self.problem, 3)
        with self.assertRaises(DomainError):
            system.rhs(0.0, np.zeros(3))

    def test_requires_n_at_least_two(self):
        with self.assertRaises(DomainError):
            reduce(self.problem, 1)

    def test_problem_validation(self):
        with self.assertRaises(DomainError):
            LinearFdeProblem(order=self.order, source=lambda t: 0.0, horizon=0.0)
        with self.assertRaises(DomainError):
            LinearFdeProblem(order=self.order, source=lambda t: 0.0, x0=float('nan'))


@pytest.mark.unit
class TestSolve(unittest.TestCase):
    """Forward integration of the reduced system."""

    def test_zero_problem_stays_zero(self):
        problem = LinearFdeProblem(order=OrderFunction.constant(0.5), source=lambda t: 0.0)
        trajectory = solve_ivp(reduce(problem, 3), start_eps=1e-4, step=1e-2)
        self.assertTrue(np.all(trajectory.states == 0.0))
        self.assertEqual(trajectory.times[-1], 1.0)

    def test_identity_on_coarse_mesh(self):
        order = OrderFunction.constant(0.5)
        problem = LinearFdeProblem(order=order, source=lambda t: t ** 0.5 / gamma(1.5))
        trajectory = solve_ivp(reduce(problem, 3), start_eps=1e-6, step=5e-3)
        np.testing.assert_allclose(trajectory.x, trajectory.times, atol=1e-3)
