"""
Command-line interface.
"""

from varfrac.cli.app import run, exit_code_for, EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL
from varfrac.cli.parser import parse_arguments
from varfrac.cli.output import ConsoleOutput
from varfrac.cli.cases import CASE_REGISTRY, get_case
from varfrac.cli.commands import RunConfig, CommandResult, build_run_config, COMMAND_REGISTRY

__all__ = [
    'run',
    'exit_code_for',
    'EXIT_OK',
    'EXIT_CONFIG',
    'EXIT_NUMERICAL',
    'parse_arguments',
    'ConsoleOutput',
    'CASE_REGISTRY',
    'get_case',
    'RunConfig',
    'CommandResult',
    'build_run_config',
    'COMMAND_REGISTRY',
]
