"""
Tests for the registered command-line cases.
"""

import unittest

import pytest

from varfrac.cli.cases import CASE_REGISTRY, FdeCase, OperatorCase, VarminCase, get_case
from varfrac.config import ConfigError
from varfrac.specfun import gamma


@pytest.mark.unit
class TestCases(unittest.TestCase):
    """Case registry."""

    def test_every_case_builds(self):
        for name in CASE_REGISTRY:
            case = get_case(name)
            self.assertEqual(case.name, name)
            self.assertTrue(case.description)

    def test_operator_case(self):
        case = get_case('power4')
        self.assertIsInstance(case, OperatorCase)
        self.assertAlmostEqual(case.function(0.5), 0.0625, places=14)
        self.assertAlmostEqual(case.order(1.0), 0.5, places=14)
        self.assertEqual(case.power.gamma_exp, 4.0)
        case.order.validate()
        case.function.validate()

    def test_solver_cases_have_identity_solution(self):
        fde = get_case('fde-manufactured')
        varmin = get_case('varmin-tracking')
        self.assertIsInstance(fde, FdeCase)
        self.assertIsInstance(varmin, VarminCase)
        t = 0.6
        marchaud = t ** ((3.0 - t) / 4.0) / gamma((7.0 - t) / 4.0)
        self.assertAlmostEqual(fde.problem.source(t), marchaud + t, places=14)
        self.assertAlmostEqual(varmin.problem.target(t), marchaud, places=14)
        self.assertEqual(varmin.problem.x_b, 1.0)
        self.assertEqual(fde.exact(t), t)

    def test_unknown_case_lists_available(self):
        with self.assertRaises(ConfigError) as ctx:
            get_case('power5')
        self.assertIn('power4-const', str(ctx.exception))
