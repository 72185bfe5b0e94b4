"""
Configuration exceptions.
"""

from varfrac.exceptions import VarFracError


class ConfigError(VarFracError):
    """Raised when there's a configuration error."""
    pass
