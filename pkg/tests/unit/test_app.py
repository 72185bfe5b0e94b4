"""
Tests for exit-code mapping and console output.
"""

import io
import unittest

import pandas as pd
import pytest

from varfrac.cli import ConsoleOutput
from varfrac.cli.app import EXIT_CONFIG, EXIT_NUMERICAL, exit_code_for
from varfrac.config import ConfigError
from varfrac.exceptions import (
    ConvergenceError,
    CrossCheckError,
    DomainError,
    NonFiniteStateError,
    OrderRangeError,
    PoleError,
    QuadratureError,
)


@pytest.mark.unit
class TestExitCodes(unittest.TestCase):
    """Error classes map onto exit codes."""

    def test_configuration_errors(self):
        for error in (ConfigError('x'), DomainError('x'), PoleError('x'), OrderRangeError('x')):
            self.assertEqual(exit_code_for(error), EXIT_CONFIG)

    def test_numerical_errors(self):
        for error in (QuadratureError('x'), CrossCheckError('x'),
                      ConvergenceError('x', 3, 1.0), NonFiniteStateError(0.5)):
            self.assertEqual(exit_code_for(error), EXIT_NUMERICAL)

    def test_unexpected_errors_are_numerical(self):
        for error in (RuntimeError('x'), ZeroDivisionError('x'), ValueError('x')):
            self.assertEqual(exit_code_for(error), EXIT_NUMERICAL)

    def test_output_path_errors(self):
        self.assertEqual(exit_code_for(FileNotFoundError('out.csv')), EXIT_CONFIG)


@pytest.mark.unit
class TestConsoleOutput(unittest.TestCase):
    """Results on stdout, messages on stderr."""

    def setUp(self):
        self.stdout, self.stderr = io.StringIO(), io.StringIO()

    def test_streams(self):
        output = ConsoleOutput(verbose=True, stdout=self.stdout, stderr=self.stderr)
        output.table(pd.DataFrame({'t': [0.5]}))
        output.metric('iterations', 2.0)
        output.status('working')
        output.error('broken')
        self.assertEqual(self.stdout.getvalue(), 't\n0.5\niterations,2\n')
        self.assertIn('working', self.stderr.getvalue())
        self.assertIn('error: broken', self.stderr.getvalue())

    def test_quiet_status(self):
        output = ConsoleOutput(stdout=self.stdout, stderr=self.stderr)
        output.status('working')
        self.assertEqual(self.stderr.getvalue(), '')
