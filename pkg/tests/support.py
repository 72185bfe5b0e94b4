"""
Shared builders for the test suite.

TestCase classes cannot take pytest fixtures, so the objects the
fixtures in conftest.py hand out are built here and imported directly.
"""

import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from varfrac.operators import PowerFunction, SmoothFunction
from varfrac.specfun import OrderFunction

REPO_CONFIG_DIR = str(Path(__file__).resolve().parent.parent / 'config')

DEFAULT_CONFIG: Dict[str, Dict[str, Any]] = {
    'operators': {'operators': {'n': 2, 'N': [3, 5], 'tol': 1e-8, 'bound_samples': 201}},
    'grid': {'grid': {'t_min': 0.001, 't_max': 1.0, 'points': 51, 'delta': 0.001}},
    'solvers': {'solvers': {'start_eps': 1e-6, 'step': 1e-3, 'start_ratio': 0.05,
                            'newton_tol': 1e-8, 'max_iter': 25, 'fd_perturbation': 1e-6,
                            'fde_N': 3, 'varmin_N': 2}},
    'parallel': {'parallel': {'mode': 'manual', 'max_workers': 1, 'cpu_reserve_cores': 1}},
    'runtime': {'runtime': {'log_level': 'WARNING', 'progress': False}},
}


def write_config_dir(config_dir: str, overrides: Optional[Dict[str, Dict[str, Any]]] = None,
                     profiles: Optional[Dict[str, Dict[str, Any]]] = None) -> str:
    """
    Write the five domain files (and optional profiles) into config_dir.

    Args:
        config_dir: Target directory, created if missing
        overrides: Per-section replacements, e.g. {'grid': {'points': 11}}
        profiles: Profile name -> profile content

    Returns:
        config_dir
    """
    os.makedirs(os.path.join(config_dir, 'profiles'), exist_ok=True)
    overrides = overrides or {}
    for name, content in DEFAULT_CONFIG.items():
        section = dict(content[name])
        section.update(overrides.get(name, {}))
        with open(os.path.join(config_dir, f'{name}.yaml'), 'w') as f:
            yaml.dump({name: section}, f)
    for name, content in (profiles or {}).items():
        with open(os.path.join(config_dir, 'profiles', f'{name}.yaml'), 'w') as f:
            yaml.dump(content, f)
    return config_dir


def linear_order() -> OrderFunction:
    """α(t) = (t+1)/4 on [0, 1]."""
    return OrderFunction.from_closed_form(lambda t: (t + 1.0) / 4.0, lambda t: 0.25, (0.0, 1.0))


def quartic() -> SmoothFunction:
    """x(t) = t^4 on [0, 1] with derivatives up to order 6."""
    return PowerFunction(4.0).as_smooth(b=1.0, max_order=6)
