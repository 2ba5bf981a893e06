# fock_oracle/measures.py

"""
Distinguishability measures evaluated directly on density matrices.
"""

import numpy as np

from errors import DomainError, UnphysicalStateError
from fock_oracle.density import FockDensity

CLAMP_TOLERANCE = 1e-10


def _same_dim(a: FockDensity, b: FockDensity) -> None:
    if a.dim != b.dim:
        raise DomainError(f"density matrices have different dimensions: {a.dim} and {b.dim}")


def fractional_power(rho: FockDensity, power: float) -> np.ndarray:
    """
    rho^power through the Hermitian eigendecomposition. Eigenvalues in [-1e-10, 0) are
    clamped to 0; anything more negative is rejected.
    """
    eigenvalues, eigenvectors = np.linalg.eigh(rho.matrix)
    if eigenvalues.min() < -CLAMP_TOLERANCE:
        raise UnphysicalStateError(f"density matrix has eigenvalue {eigenvalues.min():.3g}")
    eigenvalues = np.clip(eigenvalues, 0.0, 1.0)
    return (eigenvectors * eigenvalues ** power) @ eigenvectors.conj().T


def trace_norm_distance(a: FockDensity, b: FockDensity) -> float:
    """||a - b||_1 as the sum of absolute eigenvalues of the Hermitian difference."""
    _same_dim(a, b)
    return float(np.abs(np.linalg.eigvalsh(a.matrix - b.matrix)).sum())


def chernoff_direct(a: FockDensity, b: FockDensity, r: float) -> float:
    """tr[a^r b^(1-r)]."""
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"r must lie in [0, 1], got {r}")
    _same_dim(a, b)
    return float(np.real(np.trace(fractional_power(a, r) @ fractional_power(b, 1.0 - r))))
