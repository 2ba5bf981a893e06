# tls_probe/chernoff.py

"""
Chernoff quantity of two qubit states from their largest eigenvalues and the
angle between their Bloch vectors.
"""

import math
from dataclasses import dataclass

import numpy as np

from discriminate.minimizers import ChernoffOptimum, minimize_chernoff_over_r
from errors import DomainError
from tls_probe.bloch import BlochVector

EIGENVALUE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class QubitChernoffInputs:
    lambda_b: float
    lambda_f: float
    theta: float

    def __post_init__(self) -> None:
        for name in ("lambda_b", "lambda_f"):
            value = getattr(self, name)
            if not 0.5 - EIGENVALUE_TOLERANCE <= value <= 1.0 + EIGENVALUE_TOLERANCE:
                raise DomainError(f"{name} must lie in [1/2, 1], got {value}")
        if not 0.0 <= self.theta <= math.pi + EIGENVALUE_TOLERANCE:
            raise DomainError(f"theta must lie in [0, pi], got {self.theta}")


def chernoff_inputs(v_b: BlochVector, v_f: BlochVector) -> QubitChernoffInputs:
    """
    lambda_q = (1 + |v_q|)/2 and the angle between v_b and v_f.

    The angle is taken as 0 when either vector vanishes (a maximally mixed state has
    no orientation and the Chernoff quantity does not depend on it).
    """
    a, b = v_b.as_array(), v_f.as_array()
    norm_a, norm_b = np.linalg.norm(a), np.linalg.norm(b)
    if norm_a == 0.0 or norm_b == 0.0:
        theta = 0.0
    else:
        theta = math.atan2(float(np.linalg.norm(np.cross(a, b))), float(np.dot(a, b)))
    return QubitChernoffInputs(
        lambda_b=min(1.0, 0.5 * (1.0 + norm_a)),
        lambda_f=min(1.0, 0.5 * (1.0 + norm_b)),
        theta=theta,
    )


def qubit_chernoff_r(inputs: QubitChernoffInputs, r: float) -> float:
    """tr[rho_b^r rho_f^(1-r)] for qubits; 0^0 is taken as 1 for rank-deficient states."""
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"r must lie in [0, 1], got {r}")

    lb, lf = inputs.lambda_b, inputs.lambda_f
    mb, mf = max(0.0, 1.0 - lb), max(0.0, 1.0 - lf)
    s = 1.0 - r
    aligned = lb ** r * lf ** s + mb ** r * mf ** s
    crossed = lb ** r * mf ** s + mb ** r * lf ** s
    half = 0.5 * inputs.theta
    return aligned * math.cos(half) ** 2 + crossed * math.sin(half) ** 2


def qubit_chernoff(v_b: BlochVector, v_f: BlochVector) -> ChernoffOptimum:
    """Q = min_r Q_r for the two qubit states, with the minimizing r."""
    inputs = chernoff_inputs(v_b, v_f)
    return minimize_chernoff_over_r(lambda r: qubit_chernoff_r(inputs, r))
