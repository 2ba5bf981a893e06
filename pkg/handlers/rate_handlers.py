"""
Rate table handler.
Handles the `rates` subcommand: characteristic rates of the four probe/bath pairings.
"""

import logging
from typing import Optional, TextIO

import pandas as pd

from bath.rates import rate_table
from config.run_config import RunConfig
from errors import TaggingError
from handlers.output import EXIT_OK, CsvWriter, usage_failure

logger = logging.getLogger(__name__)


class RateHandlers:
    """Handlers for rate-related subcommands."""

    def __init__(self, stream: Optional[TextIO] = None, error_stream: Optional[TextIO] = None):
        self.stream = stream
        self.error_stream = error_stream

    def cmd_rates(self, config: RunConfig) -> int:
        """Prints the 2x2 table of thermalization rates (rows: probe, columns: bath statistics)."""
        try:
            table = rate_table(config.bath())
            frame = pd.DataFrame(
                {
                    "probe": ["tls", "qho"],
                    "fermionic": [table.rate_tls_fermionic, table.rate_qho_fermionic],
                    "bosonic": [table.rate_tls_bosonic, table.rate_qho_bosonic],
                }
            )
            CsvWriter(config.precision, config.out, self.stream).write(frame)
            logger.info(f"[cmd_rates] beta*omega0={config.beta_omega}: {table}")
            return EXIT_OK
        except TaggingError as e:
            return usage_failure("cmd_rates", e, self.error_stream)
