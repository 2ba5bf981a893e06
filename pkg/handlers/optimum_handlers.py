"""
Optimization handlers.
Handles the `optimal` and `best-temp` subcommands.
"""

import logging
from typing import List, Optional, TextIO

import numpy as np
import pandas as pd

from bath.spec import BathSpec, ProbeKind, Statistics
from config.run_config import RunConfig, parse_amplitude, parse_input
from discriminate.bounds import helstrom_from_distance
from errors import NoDiscriminationError, TaggingError
from gaussian_probe import optimal as qho_optimal
from handlers.output import EXIT_OK, CsvWriter, usage_failure
from tls_probe import optimal as tls_optimal

logger = logging.getLogger(__name__)

DEFAULT_AMPLITUDE = 1.0


class OptimumHandlers:
    """Handlers for time and temperature optimization subcommands."""

    def __init__(self, stream: Optional[TextIO] = None, error_stream: Optional[TextIO] = None):
        self.stream = stream
        self.error_stream = error_stream

    def _temperatures(self, config: RunConfig) -> List[float]:
        if config.sweep is None:
            return [config.bath().beta_omega]
        lo, hi = config.sweep
        return [1.0 / inverse for inverse in np.linspace(lo, hi, config.steps)]

    def _optimum_row(self, config: RunConfig, beta_omega: float) -> dict:
        bath = BathSpec.from_beta_omega(Statistics.BOSONIC, beta_omega, config.gamma, config.omega0)
        if bath.is_zero_temperature:
            raise NoDiscriminationError("degenerate: no discrimination at zero temperature")

        if config.probe is ProbeKind.TLS:
            analytic = tls_optimal.optimal_time_tls(bath)
            initial = parse_input(config.input_descriptor, config.probe, bath)
            optimum = tls_optimal.numeric_optimal_time(initial, bath, config.t_max)
            value = helstrom_from_distance(optimum.value)
        elif config.input is None:
            analytic = qho_optimal.optimal_time_qho(bath)
            optimum = qho_optimal.closed_form_optimal_time(DEFAULT_AMPLITUDE, bath, config.t_max)
            value = optimum.value
        else:
            analytic = qho_optimal.optimal_time_qho(bath)
            initial = parse_input(config.input, config.probe, bath)
            optimum = qho_optimal.numeric_optimal_time(initial, bath, config.t_max)
            value = optimum.value

        if optimum.boundary:
            logger.warning(f"[cmd_optimal] Boundary optimum at beta*omega0={beta_omega}")
        return {
            "beta_omega": beta_omega,
            "inv_beta_omega": 1.0 / beta_omega,
            "t_bar_analytic": analytic,
            "t_bar_numeric": optimum.t_bar,
            "relative_difference": abs(optimum.t_bar - analytic) / analytic,
            "gamma_t_bar": config.gamma * analytic,
            "value": value,
            "boundary": optimum.boundary,
        }

    def cmd_optimal(self, config: RunConfig) -> int:
        """
        Reports the analytic and numerical optimal measurement times and their relative
        difference; with --sweep LO:HI the report is repeated over 1/(beta omega0) in [LO, HI].
        """
        try:
            rows = [self._optimum_row(config, beta_omega) for beta_omega in self._temperatures(config)]
            CsvWriter(config.precision, config.out, self.stream).write(pd.DataFrame(rows))
            logger.info(f"[cmd_optimal] {config.probe.value}: {len(rows)} temperatures")
            return EXIT_OK
        except TaggingError as e:
            return usage_failure("cmd_optimal", e, self.error_stream)

    def cmd_best_temp(self, config: RunConfig) -> int:
        """Reports the bath occupation, optimal time and kappa of the best temperature."""
        try:
            amplitude = DEFAULT_AMPLITUDE if config.input is None else parse_amplitude(config.input)
            best = qho_optimal.best_bath_temperature(amplitude, config.gamma, config.omega0)
            frame = pd.DataFrame(
                [
                    {
                        "n_b_best": best.n_b,
                        "beta_omega_best": best.beta_omega,
                        "gamma_t_bar_best": config.gamma * best.t_bar,
                        "kappa": best.kappa,
                        "q_best": best.q,
                    }
                ]
            )
            CsvWriter(config.precision, config.out, self.stream).write(frame)
            logger.info(f"[cmd_best_temp] N_b={best.n_b}, gamma*t_bar={config.gamma * best.t_bar}, kappa={best.kappa}")
            return EXIT_OK
        except TaggingError as e:
            return usage_failure("cmd_best_temp", e, self.error_stream)
