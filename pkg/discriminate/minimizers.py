# discriminate/minimizers.py

"""
Scalar minimizers shared by both probes.

Golden-section search is used throughout: the objectives are smooth but no
derivative formulas are available. A coarse pre-scan guards against several
local minima; every discrete local minimum of the scan is refined and the best
refined value wins.
"""

import logging
import math
from typing import Callable, List, NamedTuple, Tuple

import numpy as np

from errors import DomainError, NonFiniteObjectiveError

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2

PRESCAN_POINTS = 21
R_LOWER = 1e-6
R_UPPER = 1 - 1e-6
ARGUMENT_TOLERANCE = 1e-10
# Objectives varying by less than this over the whole scan are treated as constant.
FLAT_TOLERANCE = 1e-14


class ChernoffOptimum(NamedTuple):
    r_star: float
    q: float


class TimeOptimum(NamedTuple):
    t_bar: float
    value: float
    boundary: bool = False
    degenerate: bool = False


def _checked(f: Callable[[float], float], x: float) -> float:
    y = float(f(x))
    if not math.isfinite(y):
        raise NonFiniteObjectiveError(f"objective returned {y} at x={x}")
    return y


def golden_section(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = ARGUMENT_TOLERANCE,
) -> Tuple[float, float]:
    """
    Golden-section search for a function with a single local minimum in [a, b].

    Returns (x, f(x)) for the best point evaluated once the bracket is narrower than tol.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return x, _checked(f, x)

    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = _checked(f, c)
    yd = _checked(f, d)

    for _ in range(n - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = _checked(f, c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = _checked(f, d)

    if yc < yd:
        return c, yc
    return d, yd


def _local_minima(values: np.ndarray) -> List[int]:
    last = len(values) - 1
    minima = []
    for i, y in enumerate(values):
        left = values[i - 1] if i > 0 else math.inf
        right = values[i + 1] if i < last else math.inf
        if y <= left and y <= right:
            minima.append(i)
    return minima


def scan_and_refine(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    points: int = PRESCAN_POINTS,
    tol: float = ARGUMENT_TOLERANCE,
) -> Tuple[float, float, bool]:
    """
    Pre-scans [lo, hi] on `points` nodes, refines each discrete local minimum by
    golden-section inside its neighbouring nodes and returns (x, f(x), flat).
    """
    if not hi > lo:
        raise DomainError(f"empty search interval [{lo}, {hi}]")

    grid = np.linspace(lo, hi, points)
    values = np.array([_checked(f, x) for x in grid])

    if np.ptp(values) <= FLAT_TOLERANCE:
        return float("nan"), float(values[0]), True

    best_x, best_y = float(grid[np.argmin(values)]), float(values.min())
    minima = _local_minima(values)
    if len(minima) > 1:
        logger.debug(f"[scan_and_refine] {len(minima)} local minima in pre-scan of [{lo}, {hi}]")

    for i in minima:
        left = grid[max(i - 1, 0)]
        right = grid[min(i + 1, points - 1)]
        x, y = golden_section(f, left, right, tol)
        if y < best_y:
            best_x, best_y = x, y
    return best_x, best_y, False


def minimize_chernoff_over_r(
    q_of_r: Callable[[float], float],
    tol: float = ARGUMENT_TOLERANCE,
) -> ChernoffOptimum:
    """Q = min_r Q_r over [1e-6, 1 - 1e-6]; a constant Q_r returns r* = 1/2 by convention."""
    r_star, q, flat = scan_and_refine(q_of_r, R_LOWER, R_UPPER, tol=tol)
    if flat:
        return ChernoffOptimum(r_star=0.5, q=_checked(q_of_r, 0.5))
    return ChernoffOptimum(r_star=r_star, q=q)


def minimize_over_time(
    objective: Callable[[float], float],
    t_max: float,
    tolerance: float = ARGUMENT_TOLERANCE,
) -> TimeOptimum:
    """
    Bracketed golden-section minimization of objective(t) on [0, t_max].

    A flat objective (zero temperature) is flagged degenerate and reported at t = 0;
    an optimum that sits on either end of the window is flagged as a boundary optimum.
    """
    if not t_max > 0:
        raise DomainError(f"t_max must be > 0, got {t_max}")

    t_bar, value, flat = scan_and_refine(objective, 0.0, t_max, tol=tolerance)
    if flat:
        logger.warning("[minimize_over_time] Objective is flat over the window: degenerate")
        return TimeOptimum(t_bar=0.0, value=_checked(objective, 0.0), degenerate=True)

    edge = 10 * tolerance
    boundary = t_bar <= edge or t_bar >= t_max - edge
    if boundary:
        logger.warning(f"[minimize_over_time] Boundary optimum at t={t_bar} (window [0, {t_max}])")
    return TimeOptimum(t_bar=t_bar, value=value, boundary=boundary)
