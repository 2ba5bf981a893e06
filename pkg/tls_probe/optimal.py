# tls_probe/optimal.py

"""
Optimal measurement time and optimal pure input for the two-level probe.

For a pure input in the x-z plane with <sigma_z(0)> = s the squared trace distance
between the two hypotheses is the parabola

    Y(s, t) = (1 - s^2) f(t) + (s - sz_eq)^2 g(t),
    f = (a - b)^2,  g = (a^2 - b^2)^2,  a = exp(-Gamma_f t/2),  b = exp(-Gamma_b t/2).
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import optimize

from bath.rates import characteristic_rate, log_ratio_factor, slowest_rate
from bath.spec import BathSpec, ProbeKind, hypotheses
from discriminate.curves import DiscriminationCurve, assemble_curve
from discriminate.minimizers import TimeOptimum, minimize_over_time
from errors import DomainError, NoDiscriminationError, RootNotFoundError
from tls_probe.bloch import BlochVector, TlsEquilibrium, evolve_bloch, helstrom_error, trace_distance_tls
from tls_probe.chernoff import chernoff_inputs, qubit_chernoff_r

logger = logging.getLogger(__name__)

TSTAR_XTOL = 1e-12
SCAN_GRID_SIZE = 2001
WINDOW_RATES = 20.0


@dataclass(frozen=True)
class InputScan:
    """Maximizer of the trace distance over pure inputs at one time."""

    sz0: float
    distance: float
    vertex_admissible: bool
    degenerate: bool = False


@dataclass(frozen=True)
class InputSweep:
    """Best distance over time for every pure input of a grid."""

    sz0: np.ndarray
    distance: np.ndarray
    t_best: np.ndarray

    @property
    def argmax(self) -> float:
        # Ties go to the larger sz0.
        reversed_index = int(np.argmax(self.distance[::-1]))
        return float(self.sz0[len(self.sz0) - 1 - reversed_index])


def _require_finite_temperature(bath: BathSpec) -> None:
    if bath.is_zero_temperature:
        raise NoDiscriminationError("no discrimination at zero temperature")


def _hypothesis_rates(bath: BathSpec) -> Tuple[float, float]:
    """(Gamma_f, Gamma_b) of the two-level probe."""
    bosonic, fermionic = hypotheses(bath)
    return characteristic_rate(ProbeKind.TLS, fermionic), characteristic_rate(ProbeKind.TLS, bosonic)


def optimal_time_tls(bath: BathSpec) -> float:
    """t = ln(n_th) / (gamma (n_th - 1)), the time of smallest Helstrom error for the excited input."""
    _require_finite_temperature(bath)
    return log_ratio_factor(bath) / bath.gamma


def excited_state_distance(bath: BathSpec, t: float) -> float:
    """(1 - sz_eq)(exp(-Gamma_f t) - exp(-Gamma_b t)) for the excited-state input."""
    if t < 0:
        raise DomainError(f"time must be >= 0, got {t}")
    rate_f, rate_b = _hypothesis_rates(bath)
    sz_eq = TlsEquilibrium.for_bath(bath).sz_eq
    return (1.0 - sz_eq) * (math.exp(-rate_f * t) - math.exp(-rate_b * t))


def distance_coefficients(bath: BathSpec, t: float) -> Tuple[float, float]:
    """(f(t), g(t)) of the parabola Y."""
    if t < 0:
        raise DomainError(f"time must be >= 0, got {t}")
    rate_f, rate_b = _hypothesis_rates(bath)
    a = math.exp(-0.5 * rate_f * t)
    b = math.exp(-0.5 * rate_b * t)
    return (a - b) ** 2, (a * a - b * b) ** 2


def distance_squared(bath: BathSpec, sz0: float, t: float) -> float:
    if not -1.0 <= sz0 <= 1.0:
        raise DomainError(f"sz0 must lie in [-1, 1], got {sz0}")
    f, g = distance_coefficients(bath, t)
    sz_eq = TlsEquilibrium.for_bath(bath).sz_eq
    return (1.0 - sz0 * sz0) * f + (sz0 - sz_eq) ** 2 * g


def _vertex(bath: BathSpec, t: float) -> Optional[float]:
    """Abscissa of the maximum of Y(., t) when Y is concave in sz0, else None."""
    rate_f, rate_b = _hypothesis_rates(bath)
    a = math.exp(-0.5 * rate_f * t)
    b = math.exp(-0.5 * rate_b * t)
    # g - f = (a - b)^2 ((a + b)^2 - 1)
    curvature = (a - b) ** 2 * ((a + b) ** 2 - 1.0)
    if not curvature < 0.0:
        return None
    g = (a * a - b * b) ** 2
    return TlsEquilibrium.for_bath(bath).sz_eq * g / curvature


def vertex_admissible(bath: BathSpec, t: float) -> bool:
    """True when Y(., t) is concave and its vertex lies inside [-1, 1]."""
    if t < 0:
        raise DomainError(f"time must be >= 0, got {t}")
    vertex = _vertex(bath, t)
    return vertex is not None and abs(vertex) <= 1.0


def tstar(bath: BathSpec) -> float:
    """
    Root of exp(-Gamma_f t/2) + exp(-Gamma_b t/2) = 1/sqrt(2 - 2 N_f); the vertex of Y is
    admissible exactly for t >= t*.
    """
    _require_finite_temperature(bath)
    rate_f, rate_b = _hypothesis_rates(bath)
    sz_eq = TlsEquilibrium.for_bath(bath).sz_eq
    target = 1.0 / math.sqrt(1.0 - sz_eq)  # 2 - 2 N_f = 1 - sz_eq

    def residual(t: float) -> float:
        return math.exp(-0.5 * rate_f * t) + math.exp(-0.5 * rate_b * t) - target

    upper = 1.0 / rate_f
    for _ in range(200):
        if residual(upper) < 0:
            break
        upper *= 2.0
    else:
        raise RootNotFoundError("t* undefined for these parameters")
    if not residual(0.0) > 0:
        raise RootNotFoundError("t* undefined for these parameters")

    root = optimize.bisect(residual, 0.0, upper, xtol=TSTAR_XTOL)
    logger.debug(f"[tstar] beta*omega0={bath.beta_omega}: t*={root}")
    return float(root)


def optimal_input_scan(bath: BathSpec, t: float, grid_size: int = SCAN_GRID_SIZE) -> InputScan:
    """
    Maximizes the trace distance over pure inputs at time t: Y is evaluated on a uniform
    sz0 grid plus the parabola vertex when it is admissible. For t <= t* the maximizer
    is the excited state sz0 = 1.
    """
    if not t > 0:
        raise DomainError(f"time must be > 0, got {t}")
    if grid_size < 2:
        raise DomainError(f"grid_size must be >= 2, got {grid_size}")

    f, g = distance_coefficients(bath, t)
    sz_eq = TlsEquilibrium.for_bath(bath).sz_eq
    candidates = np.linspace(-1.0, 1.0, grid_size)
    vertex = _vertex(bath, t)
    admissible = vertex is not None and abs(vertex) <= 1.0
    if admissible:
        candidates = np.append(candidates, vertex)

    values = (1.0 - candidates ** 2) * f + (candidates - sz_eq) ** 2 * g
    best = float(values.max())
    if best <= 0.0:
        return InputScan(sz0=1.0, distance=0.0, vertex_admissible=admissible, degenerate=True)

    # Ties go to the larger sz0.
    winners = candidates[values == best]
    return InputScan(sz0=float(winners.max()), distance=math.sqrt(best), vertex_admissible=admissible)


def best_input_over_time(
    bath: BathSpec,
    sz_grid: Optional[Sequence[float]] = None,
    t_max: Optional[float] = None,
) -> InputSweep:
    """For every sz0 of the grid, the largest trace distance reachable over t in [0, t_max]."""
    _require_finite_temperature(bath)
    grid = np.linspace(-1.0, 1.0, SCAN_GRID_SIZE) if sz_grid is None else np.asarray(sz_grid, dtype=float)
    if t_max is None:
        t_max = WINDOW_RATES / slowest_rate(ProbeKind.TLS, bath)

    rate_f, rate_b = _hypothesis_rates(bath)
    sz_eq = TlsEquilibrium.for_bath(bath).sz_eq

    def negative_parabola(sz0: float, t: float) -> float:
        a = math.exp(-0.5 * rate_f * t)
        b = math.exp(-0.5 * rate_b * t)
        return -((1.0 - sz0 * sz0) * (a - b) ** 2 + (sz0 - sz_eq) ** 2 * (a * a - b * b) ** 2)

    distances, times = [], []
    for sz0 in grid:
        if not -1.0 <= sz0 <= 1.0:
            raise DomainError(f"sz0 must lie in [-1, 1], got {sz0}")
        optimum = minimize_over_time(lambda t: negative_parabola(float(sz0), t), t_max)
        distances.append(math.sqrt(max(0.0, -optimum.value)))
        times.append(optimum.t_bar)
    return InputSweep(sz0=grid, distance=np.array(distances), t_best=np.array(times))


def numeric_optimal_time(v0: BlochVector, bath: BathSpec, t_max: Optional[float] = None) -> TimeOptimum:
    """Time of the largest trace distance between the hypotheses for input v0, found numerically."""
    bosonic, fermionic = hypotheses(bath)
    if t_max is None:
        t_max = WINDOW_RATES / slowest_rate(ProbeKind.TLS, bath)

    def objective(t: float) -> float:
        return -trace_distance_tls(
            evolve_bloch(v0, bosonic, t, lab_frame=False),
            evolve_bloch(v0, fermionic, t, lab_frame=False),
        )

    optimum = minimize_over_time(objective, t_max)
    return optimum._replace(value=-optimum.value)


def discrimination_curve(
    v0: BlochVector,
    bath: BathSpec,
    times: Sequence[float],
    lab_frame: bool = False,
    max_workers: int = 1,
) -> DiscriminationCurve:
    """Helstrom error, Chernoff Q and minimizing r between the two hypotheses at every time."""
    bosonic, fermionic = hypotheses(bath)

    def states(t: float) -> Tuple[BlochVector, BlochVector]:
        return evolve_bloch(v0, bosonic, t, lab_frame), evolve_bloch(v0, fermionic, t, lab_frame)

    def chernoff_at(t: float):
        inputs = chernoff_inputs(*states(t))
        return lambda r: qubit_chernoff_r(inputs, r)

    def helstrom_at(t: float) -> float:
        return helstrom_error(*states(t))

    return assemble_curve(times, chernoff_at, helstrom_at, max_workers=max_workers)
