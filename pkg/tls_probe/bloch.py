# tls_probe/bloch.py

"""
Bloch-vector dynamics of the two-level probe.

The populations relax at the characteristic rate Gamma of the pairing and the
coherences at Gamma/2; in the lab frame the coherences additionally precess at
omega0 about z. Basis ordering is (|g>, |e>).
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from bath.rates import characteristic_rate, occupation_number
from bath.spec import BathSpec, ProbeKind, Statistics
from discriminate.bounds import helstrom_from_distance
from errors import DomainError

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class BlochVector:
    """(<sigma_x>, <sigma_y>, <sigma_z>) of a qubit state."""

    sx: float
    sy: float
    sz: float

    def __post_init__(self) -> None:
        if self.sx ** 2 + self.sy ** 2 + self.sz ** 2 > 1.0 + NORM_TOLERANCE:
            raise DomainError(f"Bloch vector ({self.sx}, {self.sy}, {self.sz}) lies outside the unit ball")

    @classmethod
    def excited(cls) -> "BlochVector":
        return cls(0.0, 0.0, 1.0)

    @classmethod
    def ground(cls) -> "BlochVector":
        return cls(0.0, 0.0, -1.0)

    @classmethod
    def pure(cls, sz0: float) -> "BlochVector":
        """Pure state in the x-z plane with the given population imbalance (sy0 = 0)."""
        if not -1.0 <= sz0 <= 1.0:
            raise DomainError(f"sz0 must lie in [-1, 1], got {sz0}")
        return cls(math.sqrt(max(0.0, 1.0 - sz0 * sz0)), 0.0, sz0)

    def as_array(self) -> np.ndarray:
        return np.array([self.sx, self.sy, self.sz])

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))


@dataclass(frozen=True)
class TlsEquilibrium:
    """Stationary population imbalance <sigma_z>_eq = 2 N_f(beta) - 1."""

    sz_eq: float

    def __post_init__(self) -> None:
        if not -1.0 <= self.sz_eq < 0.0:
            raise DomainError(f"sz_eq must lie in [-1, 0), got {self.sz_eq}")

    @classmethod
    def for_bath(cls, bath: BathSpec) -> "TlsEquilibrium":
        n_f = occupation_number(Statistics.FERMIONIC, bath.beta, bath.omega0)
        return cls(sz_eq=2.0 * n_f - 1.0)

    def as_bloch(self) -> BlochVector:
        return BlochVector(0.0, 0.0, self.sz_eq)


def evolve_bloch(v0: BlochVector, bath: BathSpec, t: float, lab_frame: bool = True) -> BlochVector:
    if t < 0 or math.isnan(t):
        raise DomainError(f"time must be >= 0, got {t}")

    rate = characteristic_rate(ProbeKind.TLS, bath)
    sz_eq = TlsEquilibrium.for_bath(bath).sz_eq
    decay = math.exp(-rate * t)
    coherence = math.exp(-0.5 * rate * t)

    sz = (v0.sz - sz_eq) * decay + sz_eq
    sx = v0.sx * coherence
    sy = v0.sy * coherence
    if lab_frame:
        phase = bath.omega0 * t
        cos, sin = math.cos(phase), math.sin(phase)
        sx, sy = sx * cos - sy * sin, sx * sin + sy * cos
    return BlochVector(sx, sy, sz)


def trace_distance_tls(va: BlochVector, vb: BlochVector) -> float:
    """Trace-norm distance of two qubit states: Euclidean distance of their Bloch vectors."""
    return float(np.linalg.norm(va.as_array() - vb.as_array()))


def helstrom_error(va: BlochVector, vb: BlochVector) -> float:
    return helstrom_from_distance(trace_distance_tls(va, vb))


def bloch_to_matrix(v: BlochVector) -> np.ndarray:
    """Density matrix (I + v.sigma)/2 in the (|g>, |e>) basis."""
    coherence = 0.5 * (v.sx - 1j * v.sy)
    return np.array(
        [
            [0.5 * (1.0 - v.sz), np.conj(coherence)],
            [coherence, 0.5 * (1.0 + v.sz)],
        ],
        dtype=complex,
    )


def bloch_from_matrix(rho: np.ndarray) -> BlochVector:
    rho = np.asarray(rho)
    if rho.shape != (2, 2):
        raise DomainError(f"expected a 2x2 density matrix, got shape {rho.shape}")
    coherence = rho[1, 0]
    sz = float(np.real(rho[1, 1] - rho[0, 0]))
    return BlochVector(2.0 * float(np.real(coherence)), -2.0 * float(np.imag(coherence)), sz)
