# bath/rates.py

"""
Occupation numbers, the thermal ratio n_th and the characteristic thermalization
rates of the four probe/bath pairings.

All rates follow the balance law of the unified generator,
gamma_{p-q} = gamma * N_q(beta) / N_p(beta), which gives:

    TLS + fermionic -> gamma            TLS + bosonic -> gamma * n_th
    QHO + fermionic -> gamma / n_th     QHO + bosonic -> gamma
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

from bath.spec import BathSpec, ProbeKind, Statistics
from errors import DivergentOccupationError, DomainError, InfiniteTemperatureError, InvalidBathError

logger = logging.getLogger(__name__)

# Probe whose own occupation N_p matches the bath statistics (homogeneous pairing).
NATIVE_STATISTICS = {
    ProbeKind.TLS: Statistics.FERMIONIC,
    ProbeKind.QHO: Statistics.BOSONIC,
}


@dataclass(frozen=True)
class RateTable:
    """Characteristic rates of the four pairings at one temperature."""

    rate_tls_fermionic: float
    rate_tls_bosonic: float
    rate_qho_fermionic: float
    rate_qho_bosonic: float


def occupation_number(statistics: Statistics, beta: float, omega0: float) -> float:
    """
    Bose-Einstein 1/(e^{beta*omega0} - 1) or Fermi-Dirac 1/(e^{beta*omega0} + 1) occupation.

    Written in terms of e^{-x} so that large beta*omega0 never overflows; beta = inf gives 0.
    """
    if math.isnan(beta) or beta < 0:
        raise InvalidBathError(f"beta must be >= 0, got {beta}")
    if not omega0 > 0:
        raise InvalidBathError(f"omega0 must be > 0, got {omega0}")

    x = beta * omega0
    boltzmann = math.exp(-x)
    if Statistics(statistics) is Statistics.BOSONIC:
        if x == 0:
            raise DivergentOccupationError("divergent occupation: bosonic occupation at beta = 0")
        return boltzmann / -math.expm1(-x)
    return boltzmann / (1.0 + boltzmann)


def thermal_ratio(beta: float, omega0: float) -> float:
    """n_th = N_b / N_f = coth(beta*omega0/2); equals 1 at zero temperature."""
    if math.isnan(beta) or beta < 0:
        raise InvalidBathError(f"beta must be >= 0, got {beta}")
    x = beta * omega0
    if x == 0:
        raise InfiniteTemperatureError("infinite-temperature ratio: n_th diverges at beta = 0")
    return 1.0 / math.tanh(x / 2.0)


def characteristic_rate(probe: ProbeKind, bath: BathSpec) -> float:
    """Relaxation rate gamma * N_q / N_p of the probe population (Table of the four pairings)."""
    probe = ProbeKind(probe)
    if bath.statistics is NATIVE_STATISTICS[probe]:
        return bath.gamma

    n_th = thermal_ratio(bath.beta, bath.omega0)
    if probe is ProbeKind.TLS:
        return bath.gamma * n_th
    return bath.gamma / n_th


def ladder_rates(bath: BathSpec) -> Tuple[float, float]:
    """
    Returns (absorption, emission) rates of the unified generator, identical for both probes:
    gamma * N_q for zeta^dag rho zeta and gamma * (1 + s_q N_q) for zeta rho zeta^dag.
    """
    n_q = occupation_number(bath.statistics, bath.beta, bath.omega0)
    return bath.gamma * n_q, bath.gamma * (1.0 + bath.sign * n_q)


def balance_rhs(probe: ProbeKind, bath: BathSpec, mean_excitation: float) -> float:
    """d<zeta^dag zeta>/dt = -gamma (N_q/N_p) <zeta^dag zeta> + gamma N_q."""
    probe = ProbeKind(probe)
    if mean_excitation < 0:
        raise DomainError(f"mean excitation must be >= 0, got {mean_excitation}")
    if probe is ProbeKind.TLS and mean_excitation > 1:
        raise DomainError(f"TLS mean excitation must be <= 1, got {mean_excitation}")

    n_q = occupation_number(bath.statistics, bath.beta, bath.omega0)
    return -characteristic_rate(probe, bath) * mean_excitation + bath.gamma * n_q


def rate_table(bath: BathSpec) -> RateTable:
    """Builds the 2x2 rate table for the temperature, gamma and omega0 of `bath`."""
    tls_f = characteristic_rate(ProbeKind.TLS, bath.with_statistics(Statistics.FERMIONIC))
    tls_b = characteristic_rate(ProbeKind.TLS, bath.with_statistics(Statistics.BOSONIC))
    qho_f = characteristic_rate(ProbeKind.QHO, bath.with_statistics(Statistics.FERMIONIC))
    qho_b = characteristic_rate(ProbeKind.QHO, bath.with_statistics(Statistics.BOSONIC))
    logger.debug(f"[rate_table] beta*omega0={bath.beta_omega}: TLS ({tls_f}, {tls_b}), QHO ({qho_f}, {qho_b})")
    return RateTable(
        rate_tls_fermionic=tls_f,
        rate_tls_bosonic=tls_b,
        rate_qho_fermionic=qho_f,
        rate_qho_bosonic=qho_b,
    )


def slowest_rate(probe: ProbeKind, bath: BathSpec) -> float:
    """Smaller of the two hypotheses' characteristic rates for `probe` (sets the time window)."""
    return min(
        characteristic_rate(probe, bath.with_statistics(Statistics.BOSONIC)),
        characteristic_rate(probe, bath.with_statistics(Statistics.FERMIONIC)),
    )


def fastest_rate(probe: ProbeKind, bath: BathSpec) -> float:
    """Larger of the two hypotheses' characteristic rates for `probe` (sets the oracle step)."""
    return max(
        characteristic_rate(probe, bath.with_statistics(Statistics.BOSONIC)),
        characteristic_rate(probe, bath.with_statistics(Statistics.FERMIONIC)),
    )


def log_ratio_factor(bath: BathSpec) -> float:
    """
    ln(n_th) / (n_th - 1), evaluated through n_th - 1 = 2 N_b so that it tends to 1
    without cancellation as the temperature goes to zero.
    """
    if bath.is_zero_temperature:
        return 1.0
    excess = 2.0 * occupation_number(Statistics.BOSONIC, bath.beta, bath.omega0)
    if excess == 0.0:
        return 1.0
    return math.log1p(excess) / excess
