"""
Configuration loader module.

Responsible for loading and merging configuration from the domain-specific YAML files.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from varfrac.config.core.exceptions import ConfigError

logger = logging.getLogger(__name__)


class ConfigLoader:
    """
    Loads and merges configuration from multiple domain-specific files.

    Supports profile-based overrides (config/profiles/<name>.yaml).
    """

    DOMAIN_FILES = [
        'operators.yaml',
        'grid.yaml',
        'solvers.yaml',
        'parallel.yaml',
        'runtime.yaml',
    ]

    def __init__(self, config_dir: str = 'config'):
        """
        Args:
            config_dir: Directory containing configuration files
        """
        self.config_dir = Path(config_dir)

    def load_all(self, profile_name: Optional[str] = None) -> Dict[str, Any]:
        """
        Load all configuration files and merge them into a single dictionary.

        Args:
            profile_name: Optional profile name ('quick' loads config/profiles/quick.yaml)

        Returns:
            Dictionary containing all merged configuration

        Raises:
            ConfigError: If a required config file is missing or unreadable
        """
        config = {}
        for domain_file in self.DOMAIN_FILES:
            file_path = self.config_dir / domain_file
            if not file_path.exists():
                raise ConfigError(f"Required configuration file not found: {file_path}")
            config.update(self._load_yaml(file_path))

        if profile_name:
            config = self.merge_configs(config, self.load_profile(profile_name))
            logger.debug("Applied configuration profile '%s'", profile_name)

        return config

    def load_profile(self, profile_name: str) -> Dict[str, Any]:
        """
        Load profile-specific configuration overrides.

        Raises:
            ConfigError: If the profile file is not found
        """
        profile_path = self.config_dir / 'profiles' / f'{profile_name}.yaml'
        if not profile_path.exists():
            available = sorted(p.stem for p in (self.config_dir / 'profiles').glob('*.yaml'))
            raise ConfigError(f"Profile configuration file not found: {profile_path}. "
                              f"Available profiles: {', '.join(available) or 'none'}")
        return self._load_yaml(profile_path)

    def merge_configs(self, base: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
        """
        Deep merge two configuration dictionaries.

        Nested dictionaries are merged rather than replaced.
        """
        result = base.copy()
        for key, value in overrides.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self.merge_configs(result[key], value)
            else:
                result[key] = value
        return result

    def _load_yaml(self, file_path: Path) -> Dict[str, Any]:
        try:
            with open(file_path, 'r') as f:
                content = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigError(f"Error parsing YAML file {file_path}: {e}")
        except IOError as e:
            raise ConfigError(f"Error reading configuration file {file_path}: {e}")
        if content is None:
            return {}
        if not isinstance(content, dict):
            raise ConfigError(f"Configuration file {file_path} must contain a mapping")
        return content
