"""
Configuration package.

Main entry point:
    from varfrac.config import ConfigManager

    config = ConfigManager(profile_name='quick')
    grid = config.get_grid_config()
"""

from varfrac.config.core import (
    ConfigError,
    ConfigManager,
    ConfigLoader,
    ConfigValidator,
    ValidationResult,
    ConfigAccessor,
    OperatorConfig,
    GridConfig,
    SolverConfig,
    ParallelConfig,
    RuntimeConfig,
)

__all__ = [
    'ConfigError',
    'ConfigManager',
    'ConfigLoader',
    'ConfigValidator',
    'ValidationResult',
    'ConfigAccessor',
    'OperatorConfig',
    'GridConfig',
    'SolverConfig',
    'ParallelConfig',
    'RuntimeConfig',
]
