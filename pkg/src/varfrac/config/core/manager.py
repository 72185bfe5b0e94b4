"""
Configuration management module.

Facade over the configuration components:
- ConfigLoader: loads and merges YAML files
- ConfigValidator: validates configuration
- ConfigAccessor: typed access
"""

import logging
import warnings
from typing import Any, Dict, Optional

from varfrac.config.core.accessor import (
    ConfigAccessor,
    GridConfig,
    OperatorConfig,
    ParallelConfig,
    RuntimeConfig,
    SolverConfig,
)
from varfrac.config.core.exceptions import ConfigError
from varfrac.config.core.loader import ConfigLoader
from varfrac.config.core.validator import ConfigValidator

logger = logging.getLogger(__name__)


class ConfigManager:
    """
    Centralized configuration manager.

    Loads the domain files, applies an optional profile and validates the
    result. ``apply_overrides`` merges command-line values and re-validates.
    """

    def __init__(self, config_dir: str = 'config', profile_name: Optional[str] = None):
        """
        Args:
            config_dir: Directory containing configuration files
            profile_name: Optional profile name (e.g. 'quick', 'reference')

        Raises:
            ConfigError: If configuration files cannot be loaded or validated
        """
        self.config_dir = config_dir
        self.profile_name = profile_name
        self.loader = ConfigLoader(config_dir)
        self.validator = ConfigValidator()
        self.config: Dict[str, Any] = self.loader.load_all(profile_name=profile_name)
        self.accessor = self._validate(self.config)

    def _validate(self, config: Dict[str, Any]) -> ConfigAccessor:
        validation_result = self.validator.validate(config)
        if not validation_result.is_valid():
            error_messages = '\n'.join(validation_result.errors)
            raise ConfigError(f"Configuration validation failed:\n{error_messages}")
        for warning in validation_result.warnings:
            warnings.warn(f"Configuration warning: {warning}", UserWarning)
        return ConfigAccessor(config)

    def apply_overrides(self, overrides: Dict[str, Any]) -> None:
        """
        Merge overrides (same nesting as the YAML files) and re-validate.

        Raises:
            ConfigError: If the merged configuration is invalid
        """
        merged = self.loader.merge_configs(self.config, overrides)
        self.accessor = self._validate(merged)
        self.config = merged
        logger.debug("Applied %d configuration override section(s)", len(overrides))

    def get_operator_config(self) -> OperatorConfig:
        return self.accessor.get_operator_config()

    def get_grid_config(self) -> GridConfig:
        return self.accessor.get_grid_config()

    def get_solver_config(self) -> SolverConfig:
        return self.accessor.get_solver_config()

    def get_parallel_config(self) -> ParallelConfig:
        return self.accessor.get_parallel_config()

    def get_runtime_config(self) -> RuntimeConfig:
        return self.accessor.get_runtime_config()
