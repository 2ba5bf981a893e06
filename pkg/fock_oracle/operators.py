# fock_oracle/operators.py

"""
Truncated ladder operators and the squeeze/displacement unitaries built from them.
"""

from functools import lru_cache

import numpy as np
from scipy.linalg import expm

from errors import DomainError


def _frozen(matrix: np.ndarray) -> np.ndarray:
    matrix.flags.writeable = False
    return matrix


def _check_dim(dim: int) -> None:
    if dim < 2:
        raise DomainError(f"truncation dimension must be >= 2, got {dim}")


@lru_cache(maxsize=None)
def annihilation(dim: int) -> np.ndarray:
    """a with <n-1|a|n> = sqrt(n) on levels 0..dim-1."""
    _check_dim(dim)
    return _frozen(np.diag(np.sqrt(np.arange(1, dim, dtype=float)), k=1).astype(complex))


@lru_cache(maxsize=None)
def number(dim: int) -> np.ndarray:
    _check_dim(dim)
    return _frozen(np.diag(np.arange(dim, dtype=float)).astype(complex))


def displacement(alpha: complex, dim: int) -> np.ndarray:
    """D(alpha) = exp(alpha a^dag - alpha^* a)."""
    a = annihilation(dim)
    return expm(alpha * a.conj().T - np.conj(alpha) * a)


def squeezing(zeta: complex, dim: int) -> np.ndarray:
    """S(zeta) = exp((zeta^* a^2 - zeta a^dag^2)/2)."""
    a = annihilation(dim)
    a2 = a @ a
    return expm(0.5 * (np.conj(zeta) * a2 - zeta * a2.conj().T))
