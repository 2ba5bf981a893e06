# gaussian_probe/dynamics.py

"""
Moment dynamics of the harmonic probe.

The generator maps Gaussian states to Gaussian states: in the frame rotating at
omega0, <a> decays at Gamma/2, <a^2> at Gamma and <a^dag a> relaxes to N_b(beta)
at Gamma, where Gamma is the characteristic rate of the pairing. Equivalently
sigma(t) = e^{-Gamma t} sigma0 + (1 - e^{-Gamma t})(2 N_b + 1) I and R(t) = e^{-Gamma t/2} R0.
"""

import logging
import math
from typing import Sequence

import numpy as np

from bath.rates import characteristic_rate, occupation_number
from bath.spec import BathSpec, ProbeKind, Statistics
from errors import DomainError
from gaussian_probe.states import (
    GaussianMoments,
    GaussianParams,
    LadderMoments,
    moments_to_params,
    params_to_moments,
    rotate,
    state_beta,
)

logger = logging.getLogger(__name__)


def _check_time(t: float) -> None:
    if t < 0 or math.isnan(t):
        raise DomainError(f"time must be >= 0, got {t}")


def _bath_occupation(bath: BathSpec) -> float:
    return occupation_number(Statistics.BOSONIC, bath.beta, bath.omega0)


def evolve_ladder_moments(m0: LadderMoments, bath: BathSpec, t: float, lab_frame: bool = True) -> LadderMoments:
    _check_time(t)
    rate = characteristic_rate(ProbeKind.QHO, bath)
    n_b = _bath_occupation(bath)
    decay = math.exp(-rate * t)

    a_mean = complex(m0.a_mean) * math.exp(-0.5 * rate * t)
    a2_mean = complex(m0.a2_mean) * decay
    if lab_frame:
        phase = bath.omega0 * t
        a_mean *= complex(math.cos(phase), -math.sin(phase))
        a2_mean *= complex(math.cos(2.0 * phase), -math.sin(2.0 * phase))
    n_mean = (m0.n_mean - n_b) * decay + n_b
    return LadderMoments(a_mean=a_mean, a2_mean=a2_mean, n_mean=n_mean)


def evolve_moments(m0: GaussianMoments, bath: BathSpec, t: float, lab_frame: bool = False) -> GaussianMoments:
    _check_time(t)
    rate = characteristic_rate(ProbeKind.QHO, bath)
    decay = math.exp(-rate * t)
    stationary = 2.0 * _bath_occupation(bath) + 1.0

    moments = GaussianMoments(
        R=math.exp(-0.5 * rate * t) * m0.R,
        sigma=decay * m0.sigma + (1.0 - decay) * stationary * np.identity(2),
    )
    if lab_frame:
        moments = rotate(moments, bath.omega0 * t)
    return moments


def evolve_gaussian(p0: GaussianParams, bath: BathSpec, t: float, lab_frame: bool = False) -> GaussianParams:
    return moments_to_params(evolve_moments(params_to_moments(p0), bath, t, lab_frame))


def state_temperature_trajectory(p0: GaussianParams, bath: BathSpec, t_grid: Sequence[float]) -> np.ndarray:
    """Inverse temperature of the evolving state's thermal part at every time of the grid."""
    grid = np.asarray(t_grid, dtype=float)
    if np.any(grid < 0):
        raise DomainError("time grid must not contain negative times")
    if np.any(np.diff(grid) < 0):
        raise DomainError("time grid must be ascending")

    betas = np.array([state_beta(evolve_gaussian(p0, bath, t).nu, bath.omega0) for t in grid])
    logger.debug(f"[state_temperature_trajectory] {bath.statistics.value}: beta(t) from {betas[0]} to {betas[-1]}")
    return betas
