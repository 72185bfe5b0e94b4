"""
Hardware-aware parallel evaluation of independent grid points.
"""

from varfrac.execution.hardware import HardwareProfile
from varfrac.execution.parallel import GridExecutor

__all__ = ['HardwareProfile', 'GridExecutor']
