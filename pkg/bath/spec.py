# bath/spec.py

"""
Value types describing the probe and the thermal bath.
"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Tuple

from errors import InvalidBathError


class Statistics(str, Enum):
    """Statistics of the bath excitations."""

    BOSONIC = "bosonic"
    FERMIONIC = "fermionic"

    @property
    def sign(self) -> int:
        """s_q: +1 for bosons, -1 for fermions."""
        return 1 if self is Statistics.BOSONIC else -1


class ProbeKind(str, Enum):
    """Probe species: two-level system or harmonic oscillator."""

    TLS = "tls"
    QHO = "qho"


@dataclass(frozen=True)
class BathSpec:
    """
    Thermal bath seen by the probe.

    beta is an inverse temperature (hbar = k_B = 1); math.inf is the zero-temperature
    sentinel and is handled exactly by every operation.
    """

    statistics: Statistics
    beta: float
    gamma: float = 1.0
    omega0: float = 1.0

    def __post_init__(self) -> None:
        if not isinstance(self.statistics, Statistics):
            object.__setattr__(self, "statistics", Statistics(self.statistics))
        if math.isnan(self.beta) or self.beta < 0:
            raise InvalidBathError(f"beta must be >= 0 (or math.inf), got {self.beta}")
        if not (self.gamma > 0 and math.isfinite(self.gamma)):
            raise InvalidBathError(f"gamma must be a positive finite rate, got {self.gamma}")
        if not (self.omega0 > 0 and math.isfinite(self.omega0)):
            raise InvalidBathError(f"omega0 must be a positive finite energy, got {self.omega0}")

    @classmethod
    def from_beta_omega(
        cls,
        statistics: Statistics,
        beta_omega: float,
        gamma: float = 1.0,
        omega0: float = 1.0,
    ) -> "BathSpec":
        """Builds a bath from the dimensionless product beta*omega0."""
        return cls(statistics=statistics, beta=beta_omega / omega0, gamma=gamma, omega0=omega0)

    @property
    def sign(self) -> int:
        return self.statistics.sign

    @property
    def beta_omega(self) -> float:
        return self.beta * self.omega0

    @property
    def is_zero_temperature(self) -> bool:
        return math.isinf(self.beta)

    def with_statistics(self, statistics: Statistics) -> "BathSpec":
        return replace(self, statistics=Statistics(statistics))


def hypotheses(bath: BathSpec) -> Tuple[BathSpec, BathSpec]:
    """Returns the (bosonic, fermionic) pair sharing beta, gamma and omega0 with `bath`."""
    return bath.with_statistics(Statistics.BOSONIC), bath.with_statistics(Statistics.FERMIONIC)
