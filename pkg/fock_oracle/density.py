# fock_oracle/density.py

"""
Density matrices in a truncated Fock basis and the initial states of both probes.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from config import settings
from errors import DomainError, TruncationError
from fock_oracle.operators import annihilation, displacement, number, squeezing
from gaussian_probe.states import GaussianParams, LadderMoments, mean_excitation
from tls_probe.bloch import BlochVector, bloch_from_matrix, bloch_to_matrix

logger = logging.getLogger(__name__)

TRACE_TOLERANCE = 1e-9
HERMITICITY_TOLERANCE = 1e-12
# Doubling stops here; beyond it the oracle is too slow to be useful.
MAX_DIM = 1024


@dataclass(frozen=True, eq=False)
class FockDensity:
    dim: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        matrix = np.asarray(self.matrix, dtype=complex)
        if matrix.shape != (self.dim, self.dim):
            raise DomainError(f"expected a {self.dim}x{self.dim} matrix, got shape {matrix.shape}")
        trace = np.trace(matrix).real
        if abs(trace - 1.0) > TRACE_TOLERANCE:
            raise DomainError(f"density matrix trace is {trace}, expected 1")
        residual = np.abs(matrix - matrix.conj().T).max()
        if residual > HERMITICITY_TOLERANCE:
            raise DomainError(f"density matrix is not Hermitian (residual {residual})")
        object.__setattr__(self, "matrix", matrix)

    @property
    def populations(self) -> np.ndarray:
        return np.real(np.diag(self.matrix))


def thermal_populations(n_mean: float, dim: int) -> np.ndarray:
    """Geometric occupation (1 - q) q^n with q = N/(N + 1), on levels 0..dim-1."""
    if n_mean < 0:
        raise DomainError(f"thermal occupation must be >= 0, got {n_mean}")
    q = n_mean / (n_mean + 1.0)
    return (1.0 - q) * q ** np.arange(dim)


def thermal_tail(n_mean: float, dim: int) -> float:
    """Population a thermal state of occupation n_mean holds on levels >= dim."""
    if n_mean <= 0:
        return 0.0
    return (n_mean / (n_mean + 1.0)) ** dim


def required_dim(n_mean: float, tail_tolerance: float = settings.TAIL_TOLERANCE, start: int = settings.FOCK_DIM) -> int:
    """Doubles the truncation from `start` until a thermal state of occupation n_mean fits."""
    dim = start
    while thermal_tail(n_mean, dim) > tail_tolerance:
        if dim >= MAX_DIM:
            raise TruncationError(f"increase truncation: occupation {n_mean} needs more than {MAX_DIM} levels")
        dim *= 2
        logger.debug(f"[required_dim] Doubling truncation to {dim} for occupation {n_mean}")
    return dim


def check_dim(n_mean: float, dim: int, tail_tolerance: float = settings.TAIL_TOLERANCE) -> None:
    tail = thermal_tail(n_mean, dim)
    if tail > tail_tolerance:
        raise TruncationError(f"increase truncation: occupation {n_mean} leaves {tail:.3g} above level {dim}")


def tail_population(rho: FockDensity) -> float:
    """Population held by the top quarter of the truncated levels."""
    return float(rho.populations[(3 * rho.dim) // 4:].sum())


def build_initial_state(
    spec: Union[BlochVector, GaussianParams],
    dim: int = settings.FOCK_DIM,
    tail_tolerance: float = settings.TAIL_TOLERANCE,
) -> FockDensity:
    """
    Two-level states embed in dim = 2. Gaussian states are assembled as
    D(alpha) S(zeta) rho_th S(zeta)^dag D(alpha)^dag on twice the requested truncation,
    then cut to `dim` levels and renormalized.
    """
    if isinstance(spec, BlochVector):
        return FockDensity(dim=2, matrix=bloch_to_matrix(spec))
    if not isinstance(spec, GaussianParams):
        raise DomainError(f"unsupported initial state {spec!r}")

    work_dim = 2 * dim
    thermal = np.diag(thermal_populations(spec.thermal_occupation, work_dim)).astype(complex)
    # zeta = -|chi| e^{i 2 phi} reproduces sigma = nu S(chi) S(chi)^T for the quadratures.
    zeta = -spec.chi_mod * cmath.exp(1j * spec.chi_phase)
    alpha = complex(spec.xi[0], spec.xi[1]) / math.sqrt(2.0)
    unitary = displacement(alpha, work_dim) @ squeezing(zeta, work_dim)
    rho = unitary @ thermal @ unitary.conj().T

    tail = float(np.real(np.trace(rho)) - np.real(np.trace(rho[:dim, :dim])))
    if tail > tail_tolerance:
        raise TruncationError(
            f"increase truncation: state with <a^dag a> = {mean_excitation(spec):.4g} "
            f"leaves {tail:.3g} above level {dim}"
        )
    truncated = rho[:dim, :dim]
    truncated = 0.5 * (truncated + truncated.conj().T)
    return FockDensity(dim=dim, matrix=truncated / np.trace(truncated).real)


def bloch_vector(rho: FockDensity) -> BlochVector:
    return bloch_from_matrix(rho.matrix)


def ladder_moments(rho: FockDensity) -> LadderMoments:
    a = annihilation(rho.dim)
    a_mean = complex(np.trace(rho.matrix @ a))
    return LadderMoments(
        a_mean=a_mean,
        a2_mean=complex(np.trace(rho.matrix @ a @ a)),
        n_mean=float(np.real(np.trace(rho.matrix @ number(rho.dim)))),
    )
