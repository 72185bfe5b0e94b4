"""
Comparison metrics and result files.
"""

import logging
import sys
from typing import Optional, Sequence, TextIO

import numpy as np
import pandas as pd
from scipy.integrate import simpson

from varfrac.exceptions import DomainError

logger = logging.getLogger(__name__)

CSV_FLOAT_FORMAT = '%.17g'


def error_norm(f_values: Sequence[float], g_values: Sequence[float], times: Sequence[float]) -> float:
    """
    E(f, g) = sqrt(∫ (f - g)² dt) over the sampled interval, composite Simpson.

    Raises:
        DomainError: If the samples have different lengths, fewer than two
            points, or the times are not increasing
    """
    f_values = np.asarray(f_values, dtype=float)
    g_values = np.asarray(g_values, dtype=float)
    times = np.asarray(times, dtype=float)
    if not (f_values.shape == g_values.shape == times.shape):
        raise DomainError("error_norm needs f, g and times of equal length")
    if times.size < 2:
        raise DomainError("error_norm needs at least two sample points")
    if np.any(np.diff(times) <= 0):
        raise DomainError("error_norm needs strictly increasing times")
    return float(np.sqrt(max(simpson((f_values - g_values) ** 2, x=times), 0.0)))


def error_window(times: Sequence[float], a: float, delta: float) -> np.ndarray:
    """Mask of the sample times used by the error norm: t >= a + delta."""
    return np.asarray(times, dtype=float) >= a + delta


def write_csv(frame: pd.DataFrame, out: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """
    Write a result table with a header row and 17 significant digits.

    Args:
        frame: Table to write
        out: Output path; when None the table goes to stream
        stream: Defaults to sys.stdout
    """
    if out:
        frame.to_csv(out, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator='\n')
        logger.info("Wrote %d rows to %s", len(frame), out)
    else:
        frame.to_csv(stream or sys.stdout, index=False, float_format=CSV_FLOAT_FORMAT,
                     lineterminator='\n')


def format_metric(name: str, value: float) -> str:
    """One 'metric,value' line."""
    return f"{name},{value:.17g}"
