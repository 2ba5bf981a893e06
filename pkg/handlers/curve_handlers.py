"""
Curve handlers.
Handles the subcommands that emit sampled curves: curve, state-temp and sweep-input.
"""

import logging
from typing import Optional, TextIO

import numpy as np
import pandas as pd

from bath.rates import slowest_rate
from bath.spec import ProbeKind, Statistics
from config.run_config import RunConfig
from errors import TaggingError, UsageError
from gaussian_probe import optimal as qho_optimal
from gaussian_probe.dynamics import state_temperature_trajectory
from gaussian_probe.states import figure_inputs, mean_excitation
from handlers.output import EXIT_OK, CsvWriter, usage_failure
from tls_probe import optimal as tls_optimal

logger = logging.getLogger(__name__)

# Default time window, in units of the slower relaxation time of the two hypotheses.
WINDOW_RATES = 20.0


class CurveHandlers:
    """Handlers for curve-producing subcommands."""

    def __init__(self, stream: Optional[TextIO] = None, error_stream: Optional[TextIO] = None):
        self.stream = stream
        self.error_stream = error_stream

    def _writer(self, config: RunConfig) -> CsvWriter:
        return CsvWriter(config.precision, config.out, self.stream)

    def _times(self, config: RunConfig) -> np.ndarray:
        bath = config.bath()
        return config.times(WINDOW_RATES / slowest_rate(config.probe, bath))

    def cmd_curve(self, config: RunConfig) -> int:
        """
        Emits t, [helstrom], Q, Q/2, r_star between the bosonic and fermionic hypotheses.
        The Helstrom column is only available for the two-level probe.
        """
        try:
            if config.helstrom and config.probe is ProbeKind.QHO:
                raise UsageError("the Helstrom error is not available for the qho probe; use the Chernoff columns")

            bath = config.bath()
            initial = config.initial_state()
            times = self._times(config)
            if config.probe is ProbeKind.TLS:
                curve = tls_optimal.discrimination_curve(
                    initial, bath, times, lab_frame=config.lab_frame, max_workers=config.max_workers
                )
            else:
                curve = qho_optimal.discrimination_curve(
                    initial, bath, times, lab_frame=config.lab_frame, max_workers=config.max_workers
                )

            self._writer(config).write(curve.to_frame())
            logger.info(
                f"[cmd_curve] {config.probe.value}, beta*omega0={config.beta_omega}, "
                f"input={config.input_descriptor}: min Q = {curve.chernoff_q.min()}"
            )
            return EXIT_OK
        except TaggingError as e:
            return usage_failure("cmd_curve", e, self.error_stream)

    def cmd_state_temp(self, config: RunConfig) -> int:
        """Emits the inverse temperature of the evolving Gaussian state under each hypothesis."""
        try:
            if config.probe is not ProbeKind.QHO:
                raise UsageError("state-temp requires --probe qho")

            initial = config.initial_state()
            times = self._times(config)
            columns = {"t": times}
            for statistics in (Statistics.BOSONIC, Statistics.FERMIONIC):
                if config.statistics in (statistics.value, "both"):
                    bath = config.bath(statistics)
                    columns[f"beta_{statistics.value}"] = state_temperature_trajectory(initial, bath, times)

            self._writer(config).write(pd.DataFrame(columns))
            logger.info(f"[cmd_state_temp] beta*omega0={config.beta_omega}, input={config.input_descriptor}")
            return EXIT_OK
        except TaggingError as e:
            return usage_failure("cmd_state_temp", e, self.error_stream)

    def cmd_sweep_input(self, config: RunConfig) -> int:
        """
        TLS: best trace distance over time for each pure input sz0, followed by the argmax line.
        QHO: min_t Q and its argmin for the coherent, thermal and squeezed inputs of equal energy.
        """
        try:
            bath = config.bath()
            if config.probe is ProbeKind.TLS:
                sweep = tls_optimal.best_input_over_time(
                    bath, np.linspace(-1.0, 1.0, config.steps), t_max=config.t_max
                )
                frame = pd.DataFrame({"sz0": sweep.sz0, "distance": sweep.distance, "t_best": sweep.t_best})
                self._writer(config).write(frame, trailer=f"# argmax_sz0,{sweep.argmax:.{config.precision}g}")
                logger.info(f"[cmd_sweep_input] beta*omega0={config.beta_omega}: argmax sz0 = {sweep.argmax}")
                return EXIT_OK

            rows = qho_optimal.compare_inputs(bath, t_max=config.t_max)
            inputs = figure_inputs()
            frame = pd.DataFrame(
                {
                    "input": [row.name for row in rows],
                    "mean_excitation": [mean_excitation(inputs[row.name]) for row in rows],
                    "q_min": [row.q_min for row in rows],
                    "t_bar": [row.t_bar for row in rows],
                }
            )
            self._writer(config).write(frame)
            logger.info(f"[cmd_sweep_input] beta*omega0={config.beta_omega}: {rows}")
            return EXIT_OK
        except TaggingError as e:
            return usage_failure("cmd_sweep_input", e, self.error_stream)
