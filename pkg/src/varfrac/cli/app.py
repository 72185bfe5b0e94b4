"""
Command-line entry point: argument parsing, configuration, dispatch and
exit codes.
"""

import logging
import sys
import warnings
from typing import List, Optional

from varfrac.cli.commands import COMMAND_REGISTRY, build_run_config
from varfrac.cli.output import ConsoleOutput
from varfrac.cli.parser import parse_arguments
from varfrac.config import ConfigError, ConfigManager
from varfrac.exceptions import (
    ConvergenceError,
    CrossCheckError,
    DomainError,
    NonFiniteStateError,
    PoleError,
    QuadratureError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

CONFIG_ERRORS = (ConfigError, DomainError, PoleError)
NUMERICAL_ERRORS = (QuadratureError, CrossCheckError, ConvergenceError, NonFiniteStateError)


def exit_code_for(error: Exception) -> int:
    """
    Map an error to the process exit code.

    Library configuration errors and unusable output paths give 2; numerical
    failures and any other unexpected error give 3.
    """
    if isinstance(error, CONFIG_ERRORS + (OSError,)):
        return EXIT_CONFIG
    return EXIT_NUMERICAL


def run(argv: Optional[List[str]] = None, output: Optional[ConsoleOutput] = None) -> int:
    """
    Run one command.

    Args:
        argv: Command-line arguments without the program name
        output: Console output handler (a default one writes to stdout/stderr)

    Returns:
        0 on success, 2 on configuration errors, 3 on numerical failures
    """
    args = parse_arguments(argv)
    output = output or ConsoleOutput(verbose=args.verbose)
    try:
        with warnings.catch_warnings():
            # Keep configuration warnings visible once per run
            warnings.simplefilter('default', UserWarning)
            manager = ConfigManager(config_dir=args.config_dir, profile_name=args.profile)
            level = 'DEBUG' if args.verbose else manager.get_runtime_config().log_level
            logging.getLogger('varfrac').setLevel(level)

            config = build_run_config(args, manager)
            output.status(f"Running '{config.command}' on case '{config.case}'")
            result = COMMAND_REGISTRY[config.command](config)
        output.table(result.table, config.out)
    except (CONFIG_ERRORS + NUMERICAL_ERRORS) as e:
        logger.error("%s failed: %s", args.command, e)
        output.error(str(e))
        return exit_code_for(e)
    except Exception as e:
        logger.exception("%s failed unexpectedly", args.command)
        output.error(f"{type(e).__name__}: {e}")
        return exit_code_for(e)

    for name, value in result.metrics.items():
        output.metric(name, value)
    return EXIT_OK


def console_main() -> None:
    """Console-script entry point."""
    logging.basicConfig(level=logging.WARNING, format='%(levelname)s:%(name)s:%(message)s',
                        stream=sys.stderr)
    sys.exit(run(sys.argv[1:]))
