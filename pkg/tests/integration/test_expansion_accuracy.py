"""
Accuracy of the expansions against the power-function closed forms.
"""

import unittest

import numpy as np
import pytest

from varfrac.expansion import (
    ExpansionParams,
    approx_left_integral,
    approx_left_marchaud,
    approx_left_rl_derivative,
    approx_right_marchaud,
    approx_right_rl_derivative,
)
from varfrac.metrics import error_norm
from varfrac.operators import (
    PowerFunction,
    SmoothFunction,
    oracle_left_marchaud,
    oracle_right_marchaud,
    oracle_right_rl_derivative,
    power_left_integral,
    power_left_marchaud,
    power_left_rl_derivative,
)
from varfrac.specfun import OrderFunction
from tests.support import linear_order, quartic

TIMES = [0.1 * k for k in range(1, 11)]


@pytest.mark.integration
class TestBoundValidity(unittest.TestCase):
    """The a-priori bounds dominate the actual truncation error."""

    def setUp(self):
        self.x = quartic()
        self.power = PowerFunction(4.0)
        self.order = linear_order()

    def test_left_operators(self):
        for N in range(3, 9):
            params = ExpansionParams(2, N)
            for t in TIMES:
                marchaud = approx_left_marchaud(self.x, self.order, params, t)
                self.assertLessEqual(
                    abs(marchaud.value - power_left_marchaud(self.power, self.order, t)),
                    marchaud.bound_e1, msg=f"Marchaud N={N} t={t}")

                rl = approx_left_rl_derivative(self.x, self.order, params, t)
                self.assertLessEqual(
                    abs(rl.value - power_left_rl_derivative(self.power, self.order, t)),
                    rl.bound_e1 + rl.bound_e2, msg=f"RL N={N} t={t}")

                integral = approx_left_integral(self.x, self.order, params, t)
                self.assertLessEqual(
                    abs(integral.value - power_left_integral(self.power, self.order, t)),
                    integral.bound_e1, msg=f"integral N={N} t={t}")

    def test_right_operators_against_oracles(self):
        params = ExpansionParams(2, 5)
        for t in (0.0, 0.3, 0.6, 0.9):
            marchaud = approx_right_marchaud(self.x, self.order, params, t)
            self.assertLessEqual(abs(marchaud.value - oracle_right_marchaud(self.x, self.order, t)),
                                 marchaud.bound_e1 + 1e-7)
        for t in (0.3, 0.6, 0.9):
            rl = approx_right_rl_derivative(self.x, self.order, params, t)
            self.assertLessEqual(abs(rl.value - oracle_right_rl_derivative(self.x, self.order, t)),
                                 rl.bound_e1 + rl.bound_e2 + 1e-7)


@pytest.mark.integration
class TestConvergence(unittest.TestCase):
    """Error norms against the closed forms decrease with N."""

    def setUp(self):
        self.x = quartic()
        self.power = PowerFunction(4.0)
        self.order = linear_order()
        self.times = np.linspace(0.001, 1.0, 101)

    def _norms(self, approx, exact):
        reference = [exact(self.power, self.order, t) for t in self.times]
        norms = []
        for N in range(3, 7):
            params = ExpansionParams(2, N)
            values = [approx(self.x, self.order, params, t, bounds=False).value for t in self.times]
            norms.append(error_norm(values, reference, self.times))
        return norms

    def test_strictly_decreasing(self):
        for approx, exact in ((approx_left_integral, power_left_integral),
                              (approx_left_marchaud, power_left_marchaud),
                              (approx_left_rl_derivative, power_left_rl_derivative)):
            norms = self._norms(approx, exact)
            self.assertTrue(all(a > b for a, b in zip(norms, norms[1:])),
                            msg=f"{approx.__name__}: {norms}")

    def test_large_N_matches_oracle_for_low_degree(self):
        order = OrderFunction.constant(0.4)
        x = SmoothFunction.polynomial([1.0, 2.0, -1.0], max_order=4)
        params = ExpansionParams(2, 50)
        for t in (0.25, 0.5, 1.0):
            value = approx_left_marchaud(x, order, params, t, bounds=False).value
            self.assertAlmostEqual(value, oracle_left_marchaud(x, order, t), delta=1e-6)

