# gaussian_probe/optimal.py

"""
Time and temperature optimization for the harmonic probe.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Union

from bath.rates import log_ratio_factor, slowest_rate, thermal_ratio
from bath.spec import BathSpec, ProbeKind, Statistics, hypotheses
from discriminate.curves import DiscriminationCurve, assemble_curve
from discriminate.minimizers import TimeOptimum, minimize_over_time, scan_and_refine
from errors import DomainError, NoDiscriminationError
from gaussian_probe.chernoff import (
    chernoff_closed_form,
    displacement_amplitude,
    gaussian_chernoff,
    gaussian_chernoff_r,
)
from gaussian_probe.dynamics import evolve_gaussian
from gaussian_probe.states import GaussianParams, figure_inputs

logger = logging.getLogger(__name__)

WINDOW_RATES = 20.0
# Search window for the bath occupation N_b when optimizing the temperature.
OCCUPATION_RANGE = (1e-2, 1e2)


@dataclass(frozen=True)
class BestTemperature:
    n_b: float
    t_bar: float
    q: float
    kappa: float

    @property
    def beta_omega(self) -> float:
        return math.log1p(1.0 / self.n_b)


@dataclass(frozen=True)
class InputOptimum:
    """Smallest Chernoff quantity over time reached by one named input."""

    name: str
    q_min: float
    t_bar: float
    boundary: bool = False


def _default_window(bath: BathSpec) -> float:
    return WINDOW_RATES / slowest_rate(ProbeKind.QHO, bath)


def optimal_time_qho(bath: BathSpec) -> float:
    """t = 2 n_th ln(n_th) / (gamma (n_th - 1)) for the displaced thermal input at the bath temperature."""
    if bath.is_zero_temperature:
        raise NoDiscriminationError("no discrimination at zero temperature")
    return 2.0 * thermal_ratio(bath.beta, bath.omega0) * log_ratio_factor(bath) / bath.gamma


def closed_form_optimal_time(
    xi0: Union[float, Sequence[float], GaussianParams],
    bath: BathSpec,
    t_max: Optional[float] = None,
) -> TimeOptimum:
    """Numerical argmin over t of the r = 1/2 closed form; value is Q at the optimum."""
    if t_max is None:
        t_max = _default_window(bath)
    optimum = minimize_over_time(lambda t: math.log(chernoff_closed_form(xi0, bath, t, 0.5)), t_max)
    return optimum._replace(value=math.exp(optimum.value))


def numeric_optimal_time(p0: GaussianParams, bath: BathSpec, t_max: Optional[float] = None) -> TimeOptimum:
    """Argmin over t of ln Q(t) for an arbitrary Gaussian input; value is Q at the optimum."""
    bosonic, fermionic = hypotheses(bath)
    if t_max is None:
        t_max = _default_window(bath)

    def log_q(t: float) -> float:
        state_b = evolve_gaussian(p0, bosonic, t)
        state_f = evolve_gaussian(p0, fermionic, t)
        return math.log(gaussian_chernoff(state_b, state_f).q)

    optimum = minimize_over_time(log_q, t_max)
    return optimum._replace(value=math.exp(optimum.value))


def best_bath_temperature(
    xi0: Union[float, Sequence[float]],
    gamma: float = 1.0,
    omega0: float = 1.0,
) -> BestTemperature:
    """
    Bath temperature minimizing Q(t_bar) for a displaced thermal input, with t_bar the
    optimal time at that temperature. Q(t_bar) = exp(-kappa |xi0|^2) with kappa
    independent of the displacement.
    """
    amplitude = displacement_amplitude(xi0)
    if not amplitude > 0:
        raise DomainError(f"displacement must be nonzero, got {xi0}")

    def bath_at(log_n: float) -> BathSpec:
        return BathSpec.from_beta_omega(Statistics.BOSONIC, math.log1p(math.exp(-log_n)), gamma, omega0)

    def log_q(log_n: float) -> float:
        bath = bath_at(log_n)
        return math.log(chernoff_closed_form(amplitude, bath, optimal_time_qho(bath), 0.5))

    lo, hi = (math.log(bound) for bound in OCCUPATION_RANGE)
    log_n, value, _ = scan_and_refine(log_q, lo, hi)
    bath = bath_at(log_n)
    best = BestTemperature(
        n_b=math.exp(log_n),
        t_bar=optimal_time_qho(bath),
        q=math.exp(value),
        kappa=-value / amplitude ** 2,
    )
    logger.debug(f"[best_bath_temperature] N_b={best.n_b}, t_bar={best.t_bar}, kappa={best.kappa}")
    return best


def discrimination_curve(
    p0: GaussianParams,
    bath: BathSpec,
    times: Sequence[float],
    lab_frame: bool = False,
    max_workers: int = 1,
) -> DiscriminationCurve:
    """Chernoff Q and minimizing r between the two hypotheses at every time (no Helstrom column)."""
    bosonic, fermionic = hypotheses(bath)

    def chernoff_at(t: float):
        state_b = evolve_gaussian(p0, bosonic, t, lab_frame)
        state_f = evolve_gaussian(p0, fermionic, t, lab_frame)
        return lambda r: gaussian_chernoff_r(state_b, state_f, r)

    return assemble_curve(times, chernoff_at, max_workers=max_workers)


def compare_inputs(
    bath: BathSpec,
    inputs: Optional[Dict[str, GaussianParams]] = None,
    t_max: Optional[float] = None,
) -> List[InputOptimum]:
    """min_t Q and its argmin for each input; defaults to the three equal-energy inputs."""
    inputs = figure_inputs() if inputs is None else inputs
    rows = []
    for name, p0 in inputs.items():
        optimum = numeric_optimal_time(p0, bath, t_max)
        rows.append(InputOptimum(name=name, q_min=optimum.value, t_bar=optimum.t_bar, boundary=optimum.boundary))
    return rows
