# discriminate/bounds.py

"""
Error-probability bounds built from the trace distance and the Chernoff quantity.
"""

import math
from dataclasses import dataclass

from errors import DomainError


@dataclass(frozen=True)
class CopyBound:
    """Upper bound Q^N / 2 on the error probability after measuring N copies."""

    n_copies: int
    bound: float


def n_copy_bound(q: float, n: int) -> CopyBound:
    if not 0.0 <= q <= 1.0 or math.isnan(q):
        raise DomainError(f"Chernoff quantity must lie in [0, 1], got {q}")
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"number of copies must be a positive integer, got {n}")
    n = int(n)
    return CopyBound(n_copies=n, bound=0.5 * q ** n)


def helstrom_from_distance(distance: float) -> float:
    """Minimum single-shot error probability (1 - D/2)/2 for trace-norm distance D in [0, 2]."""
    if distance < -1e-12 or distance > 2 + 1e-12 or math.isnan(distance):
        raise DomainError(f"trace-norm distance must lie in [0, 2], got {distance}")
    return min(0.5, max(0.0, 0.5 * (1.0 - 0.5 * distance)))
