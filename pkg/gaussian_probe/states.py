# gaussian_probe/states.py

"""
Single-mode Gaussian states in two dual representations.

GaussianParams holds the thermal parameter nu = 2N + 1, the displacement xi and the
squeezing chi = |chi| e^{i 2 phi}; GaussianMoments holds the first moments R and
the covariance sigma of the quadratures x = (a + a^dag)/sqrt(2),
y = (a - a^dag)/(i sqrt(2)), normalized so that the vacuum has sigma = identity.
LadderMoments holds <a>, <a^2> and <a^dag a>.
"""

import math
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from errors import DomainError, UnphysicalStateError

NU_TOLERANCE = 1e-12
DET_TOLERANCE = 1e-8
SYMMETRY_TOLERANCE = 1e-10

# Basis change R = U A between (<a>, <a^dag>) and (<x>, <y>).
U = np.array([[1.0, 1.0], [-1.0j, 1.0j]]) / math.sqrt(2.0)


def _wrap_phase(angle: float) -> float:
    """Maps an angle into (-pi, pi]."""
    wrapped = math.remainder(angle, 2.0 * math.pi)
    return math.pi if wrapped == -math.pi else wrapped


@dataclass(frozen=True)
class GaussianParams:
    nu: float
    xi: Tuple[float, float] = (0.0, 0.0)
    chi_mod: float = 0.0
    chi_phase: float = 0.0

    def __post_init__(self) -> None:
        if not self.nu >= 1.0 - NU_TOLERANCE:
            raise DomainError(f"nu must be >= 1, got {self.nu}")
        if not self.chi_mod >= 0.0:
            raise DomainError(f"squeezing modulus must be >= 0, got {self.chi_mod}")
        xi = tuple(float(component) for component in self.xi)
        if len(xi) != 2:
            raise DomainError(f"displacement must have two components, got {self.xi}")
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "chi_phase", _wrap_phase(float(self.chi_phase)))

    @classmethod
    def ground(cls) -> "GaussianParams":
        return cls(nu=1.0)

    @classmethod
    def thermal(cls, n_mean: float) -> "GaussianParams":
        if n_mean < 0:
            raise DomainError(f"thermal occupation must be >= 0, got {n_mean}")
        return cls(nu=2.0 * n_mean + 1.0)

    @classmethod
    def coherent(cls, amplitude: float, angle: float = 0.0) -> "GaussianParams":
        """Displaced vacuum with |xi| = amplitude along the given quadrature angle."""
        return cls(nu=1.0, xi=(amplitude * math.cos(angle), amplitude * math.sin(angle)))

    @classmethod
    def squeezed(cls, chi_mod: float, chi_phase: float = 0.0) -> "GaussianParams":
        return cls(nu=1.0, chi_mod=chi_mod, chi_phase=chi_phase)

    @classmethod
    def displaced_thermal(cls, amplitude: float, nu: float) -> "GaussianParams":
        return cls(nu=nu, xi=(amplitude, 0.0))

    @property
    def displacement(self) -> np.ndarray:
        return np.array(self.xi)

    @property
    def thermal_occupation(self) -> float:
        """N = (nu - 1)/2 of the underlying thermal state."""
        return max(0.0, 0.5 * (self.nu - 1.0))


@dataclass(frozen=True, eq=False)
class GaussianMoments:
    R: np.ndarray
    sigma: np.ndarray = field(default_factory=lambda: np.identity(2))

    def __post_init__(self) -> None:
        R = np.asarray(self.R, dtype=float).reshape(2)
        sigma = np.asarray(self.sigma, dtype=float).reshape(2, 2)
        if abs(sigma[0, 1] - sigma[1, 0]) > SYMMETRY_TOLERANCE * max(1.0, np.abs(sigma).max()):
            raise UnphysicalStateError(f"covariance must be symmetric, got {sigma.tolist()}")
        sigma = 0.5 * (sigma + sigma.T)
        if sigma[0, 0] <= 0 or np.linalg.det(sigma) < 1.0 - DET_TOLERANCE:
            raise UnphysicalStateError(f"unphysical covariance: det(sigma) = {np.linalg.det(sigma)}")
        object.__setattr__(self, "R", R)
        object.__setattr__(self, "sigma", sigma)


@dataclass(frozen=True)
class LadderMoments:
    a_mean: complex
    a2_mean: complex
    n_mean: float

    def __post_init__(self) -> None:
        if self.n_mean < abs(self.a_mean) ** 2 - NU_TOLERANCE:
            raise DomainError(f"<a^dag a> = {self.n_mean} is smaller than |<a>|^2 = {abs(self.a_mean) ** 2}")


def symplectic_squeezing(chi_mod: float, chi_phase: float) -> np.ndarray:
    """Symmetric 2x2 symplectic matrix S(chi) acting on the quadratures."""
    c, s = math.cosh(chi_mod), math.sinh(chi_mod)
    cos, sin = math.cos(chi_phase), math.sin(chi_phase)
    return np.array([[c + s * cos, s * sin], [s * sin, c - s * cos]])


def params_to_moments(p: GaussianParams) -> GaussianMoments:
    """R = xi, sigma = nu S(chi) S(chi)^T."""
    s = symplectic_squeezing(p.chi_mod, p.chi_phase)
    return GaussianMoments(R=p.displacement, sigma=p.nu * s @ s.T)


def moments_to_params(m: GaussianMoments) -> GaussianParams:
    """
    Inverts params_to_moments: nu = sqrt(det sigma), the squeezing modulus from the
    eigenvalue ratio nu e^{+-2|chi|} and its phase from the eigenvector orientation.
    """
    det = float(np.linalg.det(m.sigma))
    if det < 1.0 - DET_TOLERANCE:
        raise UnphysicalStateError(f"unphysical covariance: det(sigma) = {det}")
    nu = max(1.0, math.sqrt(det))

    p, s, q = m.sigma[0, 0], m.sigma[1, 1], m.sigma[0, 1]
    anisotropy = math.hypot(p - s, 2.0 * q)
    chi_mod = 0.5 * math.asinh(anisotropy / (2.0 * nu))
    chi_phase = math.atan2(2.0 * q, p - s) if chi_mod > 0 else 0.0
    return GaussianParams(nu=nu, xi=tuple(m.R), chi_mod=chi_mod, chi_phase=chi_phase)


def ladder_to_moments(lm: LadderMoments) -> GaussianMoments:
    a = complex(lm.a_mean)
    ladder_vector = np.array([a, a.conjugate()])
    central = complex(lm.a2_mean) - a * a
    anticommutator = 2.0 * (lm.n_mean - abs(a) ** 2) + 1.0
    sigma_a = np.array([[2.0 * central, anticommutator], [anticommutator, 2.0 * central.conjugate()]])
    return GaussianMoments(R=np.real(U @ ladder_vector), sigma=np.real(U @ sigma_a @ U.T))


def moments_to_ladder(m: GaussianMoments) -> LadderMoments:
    u_dag = U.conj().T
    ladder_vector = u_dag @ m.R
    sigma_a = u_dag @ m.sigma @ U.conj()
    a = complex(ladder_vector[0])
    return LadderMoments(
        a_mean=a,
        a2_mean=complex(0.5 * sigma_a[0, 0] + a * a),
        n_mean=float(np.real(0.5 * (sigma_a[0, 1] - 1.0)) + abs(a) ** 2),
    )


def mean_excitation(p: GaussianParams) -> float:
    """<a^dag a> = (cosh(2|chi|) nu + |xi|^2 - 1)/2."""
    return 0.5 * (math.cosh(2.0 * p.chi_mod) * p.nu + float(np.dot(p.displacement, p.displacement)) - 1.0)


def state_beta(nu: float, omega0: float = 1.0) -> float:
    """Inverse temperature of the thermal part, (1/omega0) ln((nu + 1)/(nu - 1)); inf when pure."""
    if nu < 1.0 - NU_TOLERANCE:
        raise DomainError(f"nu must be >= 1, got {nu}")
    if nu <= 1.0:
        return math.inf
    return math.log((nu + 1.0) / (nu - 1.0)) / omega0


def figure_inputs() -> Dict[str, GaussianParams]:
    """Coherent, thermal and squeezed inputs that all carry <a^dag a> = 1."""
    return OrderedDict(
        [
            ("coherent", GaussianParams.coherent(math.sqrt(2.0))),
            ("thermal", GaussianParams.thermal(1.0)),
            ("squeezed", GaussianParams.squeezed(0.5 * math.acosh(3.0))),
        ]
    )


def rotate(m: GaussianMoments, angle: float) -> GaussianMoments:
    """Phase-space rotation taking <a> to <a> e^{-i angle}."""
    cos, sin = math.cos(angle), math.sin(angle)
    rotation = np.array([[cos, sin], [-sin, cos]])
    return GaussianMoments(R=rotation @ m.R, sigma=rotation @ m.sigma @ rotation.T)
