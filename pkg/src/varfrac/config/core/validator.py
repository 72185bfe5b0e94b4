"""
Configuration validator module.

Validates configuration structure, types, ranges and logical constraints.
"""

from typing import Any, Dict, List


class ValidationResult:
    """Result of configuration validation."""

    def __init__(self):
        self.errors: List[str] = []
        self.warnings: List[str] = []

    def is_valid(self) -> bool:
        """Check if validation passed."""
        return len(self.errors) == 0

    def add_error(self, message: str):
        self.errors.append(message)

    def add_warning(self, message: str):
        self.warnings.append(message)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _as_float(value: Any):
    if isinstance(value, bool):
        return None
    try:
        return float(value)
    except (ValueError, TypeError):
        return None


class ConfigValidator:
    """
    Validates configuration structure, types and constraints.
    """

    LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')

    def validate(self, config: Dict[str, Any]) -> ValidationResult:
        """
        Validate the entire configuration.

        Returns:
            ValidationResult with errors and warnings
        """
        result = ValidationResult()
        self.validate_operators(config.get('operators', {}), result)
        self.validate_grid(config.get('grid', {}), result)
        self.validate_solvers(config.get('solvers', {}), result)
        self.validate_parallel(config.get('parallel', {}), result)
        self.validate_runtime(config.get('runtime', {}), result)
        return result

    def _positive(self, config: Dict[str, Any], section: str, key: str, result: ValidationResult):
        if key not in config:
            return
        value = _as_float(config[key])
        if value is None:
            result.add_error(f"'{section}.{key}' must be a number")
        elif value <= 0:
            result.add_error(f"'{section}.{key}' must be > 0")

    def validate_operators(self, config: Dict[str, Any], result: ValidationResult):
        """Validate expansion parameters."""
        if not config:
            result.add_error("Missing 'operators' configuration section")
            return

        n = config.get('n')
        if n is None:
            result.add_error("Missing 'operators.n' field")
        elif not _is_int(n) or n < 0:
            result.add_error("'operators.n' must be a non-negative integer")
            n = None

        sizes = config.get('N')
        if sizes is None:
            result.add_error("Missing 'operators.N' field")
        else:
            if _is_int(sizes):
                sizes = [sizes]
            if not isinstance(sizes, list) or not sizes or not all(_is_int(s) for s in sizes):
                result.add_error("'operators.N' must be an integer or a non-empty list of integers")
            elif n is not None and min(sizes) < n + 1:
                result.add_error("'operators.N' must be >= 'operators.n' + 1")

        self._positive(config, 'operators', 'tol', result)
        if 'tol' in config and (_as_float(config['tol']) or 0.0) > 1e-4:
            result.add_warning("'operators.tol' above 1e-4 makes oracle values unreliable as references")

        if 'bound_samples' in config:
            samples = config['bound_samples']
            if not _is_int(samples) or samples < 2:
                result.add_error("'operators.bound_samples' must be an integer >= 2")

    def validate_grid(self, config: Dict[str, Any], result: ValidationResult):
        """Validate the evaluation grid."""
        if not config:
            result.add_error("Missing 'grid' configuration section")
            return

        t_min = _as_float(config.get('t_min'))
        t_max = _as_float(config.get('t_max'))
        if t_min is None:
            result.add_error("'grid.t_min' must be a number")
        if t_max is None:
            result.add_error("'grid.t_max' must be a number")
        if t_min is not None and t_max is not None and not t_min < t_max:
            result.add_error("'grid.t_min' must be < 'grid.t_max'")

        points = config.get('points')
        if not _is_int(points) or points < 2:
            result.add_error("'grid.points' must be >= 2")
        elif points % 2 == 0:
            result.add_warning("'grid.points' is even; Simpson's rule is exact on odd point counts")

        if 'delta' in config:
            delta = _as_float(config['delta'])
            if delta is None or delta < 0:
                result.add_error("'grid.delta' must be a non-negative number")

    def validate_solvers(self, config: Dict[str, Any], result: ValidationResult):
        """Validate ODE and shooting settings."""
        if not config:
            result.add_error("Missing 'solvers' configuration section")
            return

        for key in ('start_eps', 'step', 'newton_tol', 'fd_perturbation'):
            self._positive(config, 'solvers', key, result)

        if 'start_ratio' in config:
            ratio = _as_float(config['start_ratio'])
            if ratio is None or not 0 < ratio < 1:
                result.add_error("'solvers.start_ratio' must be between 0 and 1")

        if 'max_iter' in config and (not _is_int(config['max_iter']) or config['max_iter'] < 1):
            result.add_error("'solvers.max_iter' must be a positive integer")

        for key in ('fde_N', 'varmin_N'):
            if key in config and (not _is_int(config[key]) or config[key] < 2):
                result.add_error(f"'solvers.{key}' must be an integer >= 2")

        start_eps = _as_float(config.get('start_eps'))
        step = _as_float(config.get('step'))
        if start_eps and step and start_eps >= step:
            result.add_warning("'solvers.start_eps' is not smaller than 'solvers.step'")

    def validate_parallel(self, config: Dict[str, Any], result: ValidationResult):
        """Validate parallel execution configuration."""
        if not config:
            return  # Parallel config is optional

        if 'mode' in config and config['mode'] not in ['auto', 'manual']:
            result.add_error("'parallel.mode' must be 'auto' or 'manual'")

        if 'max_workers' in config and config['max_workers'] is not None:
            workers = config['max_workers']
            if not _is_int(workers):
                result.add_error("'parallel.max_workers' must be an integer or null")
            elif workers <= 0:
                result.add_error("'parallel.max_workers' must be positive or null")

        if 'cpu_reserve_cores' in config:
            reserve = config['cpu_reserve_cores']
            if not _is_int(reserve) or reserve < 0:
                result.add_error("'parallel.cpu_reserve_cores' must be a non-negative integer")

        if config.get('mode') == 'manual' and config.get('max_workers') is None:
            result.add_warning("'parallel.mode' is 'manual' but 'parallel.max_workers' is not set")

    def validate_runtime(self, config: Dict[str, Any], result: ValidationResult):
        """Validate logging and output settings."""
        if not config:
            return  # Runtime config is optional

        level = config.get('log_level')
        if level is not None and str(level).upper() not in self.LOG_LEVELS:
            result.add_error(f"'runtime.log_level' must be one of {', '.join(self.LOG_LEVELS)}")

        if 'progress' in config and not isinstance(config['progress'], bool):
            result.add_error("'runtime.progress' must be a boolean")
