"""
Verification handler.
Handles the `verify` subcommand: analytic results against the truncated Fock-space oracle.
"""

import logging
import sys
from typing import Optional, TextIO

from config.run_config import RunConfig
from errors import TaggingError
from fock_oracle.harness import OracleReport, random_cases, run_suite
from handlers.output import EXIT_OK, EXIT_VERIFY_FAILED, CsvWriter, usage_failure

logger = logging.getLogger(__name__)


class VerifyHandlers:
    """Handlers for oracle verification subcommands."""

    def __init__(self, stream: Optional[TextIO] = None, error_stream: Optional[TextIO] = None):
        self.stream = stream
        self.error_stream = error_stream

    def _summary(self, report: OracleReport) -> str:
        return (
            f"max_bloch_dev={report.max_bloch_dev:.3g} max_moment_dev={report.max_moment_dev:.3g} "
            f"max_q_dev={report.max_q_dev:.3g} max_distance_dev={report.max_distance_dev:.3g} "
            f"tail_population={report.tail_population:.3g}"
        )

    def cmd_verify(self, config: RunConfig) -> int:
        """
        Runs the randomized oracle comparison and writes one CSV row per case.
        Exits with 1 when any case exceeds its threshold or fails to integrate.
        """
        try:
            cases = []
            for probe in config.probes:
                cases.extend(
                    random_cases(probe, config.cases, config.seed, config.beta_omega, config.gamma, config.omega0)
                )
            report = run_suite(cases, dim=config.dim, dt=config.dt, max_workers=config.max_workers)
        except TaggingError as e:
            return usage_failure("cmd_verify", e, self.error_stream)

        CsvWriter(config.precision, config.out, self.stream).write(report.cases)
        errors = self.error_stream or sys.stderr
        print(self._summary(report), file=errors)
        if report.passed:
            logger.info(f"[cmd_verify] {len(cases)} cases passed: {self._summary(report)}")
            return EXIT_OK

        for failure in report.failures:
            print(f"FAILED {failure}", file=errors)
        logger.error(f"[cmd_verify] {len(report.failures)} failures")
        return EXIT_VERIFY_FAILED
