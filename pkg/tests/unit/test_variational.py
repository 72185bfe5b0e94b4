"""
Tests for the Pontryagin system of the tracking problem.
"""

import math
import unittest

import numpy as np
import pytest

from varfrac.exceptions import DomainError
from varfrac.solvers import (
    LinearFdeProblem,
    TrackingVariationalProblem,
    build_pontryagin,
    evaluate_functional,
    fde_coefficients,
    graded_mesh,
    hamiltonian,
    optimal_control,
    reduce,
    shoot,
    trajectory_from_path,
)
from varfrac.specfun import OrderFunction, gamma
from tests.support import linear_order


def _identity_target(order):
    return lambda t: t ** (1.0 - order(t)) / gamma(2.0 - order(t))


@pytest.mark.unit
class TestHamiltonian(unittest.TestCase):
    """Stationarity and costate structure."""

    def setUp(self):
        self.order = linear_order()
        self.problem = TrackingVariationalProblem(order=self.order,
                                                  target=_identity_target(self.order))
        self.N = 3
        self.t = 0.4
        self.x = 0.3
        self.moments = np.array([0.05, 0.02])
        self.costate = np.array([0.7, -0.2, 0.1])

    def _h(self, x=None, u=None, moments=None):
        return hamiltonian(self.t, self.x if x is None else x, 0.2 if u is None else u,
                           self.moments if moments is None else moments,
                           self.costate, self.problem, self.N)

    def test_zero_at_target_without_costate(self):
        g = self.problem.target(self.t)
        value = hamiltonian(self.t, self.x, g, self.moments, np.zeros(self.N), self.problem, self.N)
        self.assertEqual(value, 0.0)

    def test_optimal_control_is_stationary(self):
        u_star = optimal_control(self.t, self.costate[0], self.problem, self.N)
        h = 1e-4
        slope = (self._h(u=u_star + h) - self._h(u=u_star - h)) / (2.0 * h)
        self.assertAlmostEqual(slope, 0.0, delta=1e-8)
        self.assertLess(self._h(u=u_star), self._h(u=u_star + 0.1))

    def test_costate_is_minus_state_gradient(self):
        system = build_pontryagin(self.problem, self.N)
        rng = np.random.default_rng(7)
        # H is affine in x and V, so a wide central difference only sees rounding
        h = 1e-3
        for _ in range(20):
            t = float(rng.uniform(0.1, 0.95))
            x = float(rng.normal())
            u = float(rng.normal())
            moments = rng.normal(size=self.N - 1)
            costate = rng.normal(size=self.N)

            def h_at(x_value, moment_values):
                return hamiltonian(t, x_value, u, moment_values, costate, self.problem, self.N)

            derivative = system.costate_rhs(t, costate)
            d_x = (h_at(x + h, moments) - h_at(x - h, moments)) / (2.0 * h)
            self.assertAlmostEqual(derivative[0], -d_x, delta=1e-6 * max(1.0, abs(d_x)))
            for i in range(self.N - 1):
                step = np.zeros(self.N - 1)
                step[i] = h
                d_v = (h_at(x, moments + step) - h_at(x, moments - step)) / (2.0 * h)
                self.assertAlmostEqual(derivative[i + 1], -d_v, delta=1e-6 * max(1.0, abs(d_v)))

    def test_length_mismatch(self):
        with self.assertRaises(DomainError):
            hamiltonian(self.t, self.x, 0.0, [0.1], self.costate, self.problem, self.N)


@pytest.mark.unit
class TestPontryaginSystem(unittest.TestCase):
    """State equations of the control system."""

    def setUp(self):
        self.order = linear_order()
        self.target = _identity_target(self.order)
        self.problem = TrackingVariationalProblem(order=self.order, target=self.target)

    def test_layout(self):
        system = build_pontryagin(self.problem, 3)
        self.assertEqual(system.state_dim, 6)
        self.assertEqual(system.labels, ('x', 'V_2', 'V_3', 'lambda_1', 'lambda_2', 'lambda_3'))
        self.assertEqual(system.rhs(0.5, np.ones(6)).shape, (6,))

    def test_halves_match_full_system(self):
        system = build_pontryagin(self.problem, 3)
        full = np.array([0.3, 0.04, 0.01, 0.7, -0.2, 0.1])
        derivative = system.rhs(0.6, full)
        # the state half sees only λ_1 and the costate half never sees the state
        np.testing.assert_allclose(system.state_rhs(0.6, full[:3], full[3]), derivative[:3],
                                   rtol=1e-14)
        np.testing.assert_allclose(system.costate_rhs(0.6, full[3:]), derivative[3:], rtol=1e-14)

    def test_zero_costate_reduces_to_fde(self):
        system = build_pontryagin(self.problem, 4)
        fde = reduce(LinearFdeProblem(order=self.order, source=self.target), 4)
        state = np.array([0.3, 0.04, 0.01, 0.002])
        for t in (0.1, 0.5, 0.9):
            np.testing.assert_allclose(system.state_rhs(t, state, 0.0), fde.rhs(t, state),
                                       rtol=1e-12, atol=1e-14)

    def test_drive_of_target(self):
        # B⁻¹ s^(α-1) g reduces to B⁻¹/Γ((7-t)/4) for the identity target
        system = build_pontryagin(self.problem, 2)
        t = 0.6
        _, big_b, _ = fde_coefficients(self.order(t), 2)
        derivative = system.state_rhs(t, np.zeros(2), 0.0)
        self.assertAlmostEqual(derivative[0], 1.0 / (big_b * gamma((7.0 - t) / 4.0)), places=12)

    def test_requires_n_at_least_two(self):
        with self.assertRaises(DomainError):
            build_pontryagin(self.problem, 1)

    def test_problem_validation(self):
        with self.assertRaises(DomainError):
            TrackingVariationalProblem(order=self.order, target=self.target, a=1.0, b=1.0)
        with self.assertRaises(DomainError):
            TrackingVariationalProblem(order=self.order, target=self.target, x_b=math.inf)


@pytest.mark.unit
class TestShooting(unittest.TestCase):
    """Shooting on coarse meshes."""

    def test_zero_problem(self):
        problem = TrackingVariationalProblem(order=OrderFunction.constant(0.5),
                                             target=lambda t: 0.0, x_b=0.0)
        result = shoot(build_pontryagin(problem, 2), problem, start_eps=1e-4, step=1e-2)
        self.assertTrue(result.converged)
        self.assertEqual(result.iterations, 0)
        self.assertTrue(np.all(result.trajectory.states == 0.0))

    def test_identity_minimiser(self):
        order = OrderFunction.constant(0.5)
        problem = TrackingVariationalProblem(order=order, target=_identity_target(order))
        result = shoot(build_pontryagin(problem, 2), problem, step=5e-3)
        self.assertTrue(result.converged)
        self.assertLessEqual(abs(result.residual[0]), 1e-8)
        np.testing.assert_allclose(result.trajectory.x, result.trajectory.times, atol=1e-2)
        self.assertEqual(result.trajectory.column('lambda_2')[-1], 0.0)
        self.assertEqual(result.residual.size, 2)


@pytest.mark.unit
class TestFunctional(unittest.TestCase):
    """Evaluation of the tracking functional."""

    def setUp(self):
        self.order = linear_order()
        self.problem = TrackingVariationalProblem(order=self.order,
                                                  target=_identity_target(self.order))
        self.times = graded_mesh(0.0, 1e-6, 1.0, 1e-3)

    def test_exact_path_is_near_zero(self):
        exact = trajectory_from_path(self.times, self.times, self.problem, 3)
        perturbed = trajectory_from_path(self.times, self.times + 0.1 * np.sin(np.pi * self.times),
                                         self.problem, 3)
        j_exact = evaluate_functional(exact, self.problem, 3)
        j_perturbed = evaluate_functional(perturbed, self.problem, 3)
        self.assertLess(j_exact, 1e-6)
        self.assertGreater(j_perturbed, 100.0 * j_exact)

    def test_moment_columns(self):
        trajectory = trajectory_from_path(self.times, self.times, self.problem, 3)
        self.assertEqual(trajectory.labels, ('x', 'V_2', 'V_3'))
        self.assertAlmostEqual(trajectory.column('V_2')[-1], 0.5, delta=1e-6)
        self.assertAlmostEqual(trajectory.column('V_3')[-1], 2.0 / 3.0, delta=1e-6)

    def test_rejects_trajectory_at_a(self):
        times = np.linspace(0.0, 1.0, 11)
        trajectory = trajectory_from_path(times, times, self.problem, 2)
        with self.assertRaises(DomainError):
            evaluate_functional(trajectory, self.problem, 2)
