"""
Console output module.

stdout carries only CSV tables and 'metric,value' lines; status and
error messages go to stderr so they never mix with results.
"""

import sys
from typing import Optional, TextIO

import pandas as pd
from tqdm import tqdm

from varfrac.metrics import format_metric, write_csv


class ConsoleOutput:
    """
    Writes command results and user-facing messages.
    """

    def __init__(self, verbose: bool = False, stdout: Optional[TextIO] = None,
                 stderr: Optional[TextIO] = None):
        """
        Args:
            verbose: Emit status messages on stderr
            stdout: Result stream (defaults to sys.stdout at write time)
            stderr: Message stream (defaults to sys.stderr at write time)
        """
        self.verbose = verbose
        self._stdout = stdout
        self._stderr = stderr

    @property
    def stdout(self) -> TextIO:
        return self._stdout or sys.stdout

    @property
    def stderr(self) -> TextIO:
        return self._stderr or sys.stderr

    def table(self, frame: pd.DataFrame, out: Optional[str] = None):
        """Write a result table to out, or to stdout when out is None."""
        write_csv(frame, out=out, stream=self.stdout)
        if out:
            self.status(f"Wrote {len(frame)} rows to {out}")

    def metric(self, name: str, value: float):
        """Print one 'metric,value' line on stdout."""
        print(format_metric(name, value), file=self.stdout)

    def status(self, message: str):
        """Progress message on stderr; tqdm.write keeps progress bars intact."""
        if self.verbose:
            tqdm.write(message, file=self.stderr)

    def error(self, message: str):
        """Error message on stderr."""
        tqdm.write(f"error: {message}", file=self.stderr)
