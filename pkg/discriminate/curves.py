# discriminate/curves.py

"""
Sampled discrimination curves t -> (Helstrom error, Chernoff Q, minimizing r).
"""

import logging
from concurrent import futures
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from discriminate.minimizers import minimize_chernoff_over_r
from errors import DomainError

logger = logging.getLogger(__name__)

ChernoffAt = Callable[[float], Callable[[float], float]]


@dataclass(frozen=True)
class DiscriminationCurve:
    times: np.ndarray
    chernoff_q: np.ndarray
    r_star: np.ndarray
    helstrom: Optional[np.ndarray] = None

    @property
    def rescaled_q(self) -> np.ndarray:
        """Q(t)/2, the single-copy Chernoff bound on the error probability."""
        return 0.5 * self.chernoff_q

    def to_frame(self, time_unit: float = 1.0) -> pd.DataFrame:
        """Columns t, [helstrom], Q, Q/2, r_star; times are divided by `time_unit`."""
        columns = {"t": self.times / time_unit}
        if self.helstrom is not None:
            columns["helstrom"] = self.helstrom
        columns["Q"] = self.chernoff_q
        columns["Q/2"] = self.rescaled_q
        columns["r_star"] = self.r_star
        return pd.DataFrame(columns)


def _validate_times(times: Sequence[float]) -> np.ndarray:
    grid = np.asarray(times, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError("time grid must be a non-empty 1-D sequence")
    if np.any(grid < 0):
        raise DomainError("time grid must not contain negative times")
    if np.any(np.diff(grid) < 0):
        raise DomainError("time grid must be ascending")
    return grid


def assemble_curve(
    times: Sequence[float],
    chernoff_at: ChernoffAt,
    helstrom_at: Optional[Callable[[float], float]] = None,
    max_workers: int = 1,
) -> DiscriminationCurve:
    """
    Evaluates min_r Q_r (and optionally the Helstrom error) on every time of the grid.

    `chernoff_at(t)` must return the function r -> Q_r(t). Points are independent; with
    max_workers > 1 they are computed on a thread pool and collected in grid order.
    """
    grid = _validate_times(times)

    def point(t: float) -> Tuple[float, float, float]:
        optimum = minimize_chernoff_over_r(chernoff_at(t))
        p_err = helstrom_at(t) if helstrom_at is not None else float("nan")
        return optimum.q, optimum.r_star, p_err

    if max_workers > 1:
        with futures.ThreadPoolExecutor(max_workers=max_workers) as pool:
            rows = list(pool.map(point, grid))
    else:
        rows = [point(t) for t in grid]

    q_values, r_values, p_values = (np.array(column) for column in zip(*rows))
    logger.debug(f"[assemble_curve] {grid.size} points on [{grid[0]}, {grid[-1]}]")
    return DiscriminationCurve(
        times=grid,
        chernoff_q=q_values,
        r_star=r_values,
        helstrom=p_values if helstrom_at is not None else None,
    )
