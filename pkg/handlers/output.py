"""
CSV emission shared by all command handlers.
"""

import logging
import sys
from typing import Optional, TextIO

import pandas as pd

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


class CsvWriter:
    """Writes data frames as comma-separated text with a fixed number of significant digits."""

    def __init__(self, precision: int, path: Optional[str] = None, stream: Optional[TextIO] = None):
        self.precision = precision
        self.path = path
        self.stream = stream

    def render(self, frame: pd.DataFrame) -> str:
        return frame.to_csv(index=False, float_format=f"%.{self.precision}g", lineterminator="\n")

    def write(self, frame: pd.DataFrame, trailer: Optional[str] = None) -> None:
        text = self.render(frame)
        if trailer:
            text += trailer.rstrip("\n") + "\n"
        if self.path:
            with open(self.path, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(text)
            logger.info(f"[CsvWriter] Wrote {len(frame)} rows to {self.path}")
        else:
            (self.stream or sys.stdout).write(text)


def usage_failure(operation: str, error: Exception, error_stream: Optional[TextIO] = None) -> int:
    """Reports a domain or usage error on the error stream (stderr by default) and returns the usage exit code."""
    logger.error(f"[{operation}] Error: {error}")
    print(f"error: {error}", file=error_stream or sys.stderr)
    return EXIT_USAGE
