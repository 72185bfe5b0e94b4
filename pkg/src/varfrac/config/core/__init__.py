"""
Configuration core modules.

- ConfigManager: facade for configuration access
- ConfigLoader: loads and merges YAML files
- ConfigValidator: validates configuration
- ConfigAccessor: typed access
"""

from varfrac.config.core.exceptions import ConfigError
from varfrac.config.core.manager import ConfigManager
from varfrac.config.core.loader import ConfigLoader
from varfrac.config.core.validator import ConfigValidator, ValidationResult
from varfrac.config.core.accessor import (
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
