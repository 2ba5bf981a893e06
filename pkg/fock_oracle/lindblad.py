# fock_oracle/lindblad.py

"""
Fixed-step integration of the unified master equation

    d rho/dt = -i omega0 [a^dag a, rho]
               + gamma N_q (a^dag rho a - {a a^dag, rho}/2)
               + gamma (1 + s_q N_q) (a rho a^dag - {a^dag a, rho}/2)

in a truncated Fock basis. The jump terms are applied elementwise on the ladder
weights sqrt(n), which keeps the trace exact on the truncated space. A dim = 2
truncation is the two-level probe (a -> sigma_minus).
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from bath.rates import fastest_rate, ladder_rates
from bath.spec import BathSpec, ProbeKind, hypotheses
from config import settings
from errors import DomainError, StepSizeError
from fock_oracle.density import FockDensity

logger = logging.getLogger(__name__)

POSITIVITY_TOLERANCE = 1e-8


class Generator:
    """Elementwise master-equation generator acting on a stack of density matrices."""

    def __init__(self, dim: int, omega0: float, absorption: np.ndarray, emission: np.ndarray) -> None:
        levels = np.arange(dim, dtype=float)
        weights = np.sqrt(levels[1:])
        # a a^dag on the truncated space has diagonal (1, 2, ..., dim - 1, 0).
        raised = np.append(levels[1:], 0.0)

        self.dim = dim
        self.absorption = np.asarray(absorption, dtype=float).reshape(-1, 1, 1)
        self.emission = np.asarray(emission, dtype=float).reshape(-1, 1, 1)
        self.ladder = np.outer(weights, weights)
        self.hamiltonian = -1j * omega0 * (levels[:, None] - levels[None, :])
        self.loss = -0.5 * (
            self.emission * (levels[:, None] + levels[None, :])
            + self.absorption * (raised[:, None] + raised[None, :])
        )

    @classmethod
    def for_baths(cls, dim: int, baths: Sequence[BathSpec]) -> "Generator":
        rates = [ladder_rates(bath) for bath in baths]
        omega0 = baths[0].omega0
        return cls(dim, omega0, [rate[0] for rate in rates], [rate[1] for rate in rates])

    def __call__(self, rho: np.ndarray) -> np.ndarray:
        drho = (self.hamiltonian + self.loss) * rho
        drho[..., :-1, :-1] += self.emission * self.ladder * rho[..., 1:, 1:]
        drho[..., 1:, 1:] += self.absorption * self.ladder * rho[..., :-1, :-1]
        return drho


def rk4_step(generator: Generator, rho: np.ndarray, dt: float) -> np.ndarray:
    k1 = generator(rho)
    k2 = generator(rho + 0.5 * dt * k1)
    k3 = generator(rho + 0.5 * dt * k2)
    k4 = generator(rho + dt * k3)
    rho = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return 0.5 * (rho + np.conj(np.swapaxes(rho, -1, -2)))


def default_step(probe: ProbeKind, bath: BathSpec, factor: float = settings.DT_FACTOR) -> float:
    """dt = factor / Gamma_max, with the precession frequency counted as a rate."""
    return factor / max(fastest_rate(probe, bath), bath.omega0)


def _check_positivity(stack: np.ndarray, t: float) -> None:
    if not np.all(np.isfinite(stack)):
        raise StepSizeError(f"step size too large: integration diverged before t={t}")
    lowest = float(np.linalg.eigvalsh(stack).min())
    if lowest < -POSITIVITY_TOLERANCE:
        raise StepSizeError(f"step size too large: eigenvalue {lowest:.3g} at t={t}")


def _probe_of(rho: FockDensity, probe: ProbeKind) -> ProbeKind:
    probe = ProbeKind(probe)
    if probe is ProbeKind.TLS and rho.dim != 2:
        raise DomainError(f"the two-level probe lives in dim = 2, got dim = {rho.dim}")
    return probe


def lindblad_step(rho: FockDensity, bath: BathSpec, probe: ProbeKind, dt: float) -> FockDensity:
    """One classical fourth-order step of the master equation."""
    _probe_of(rho, probe)
    if not dt > 0:
        raise DomainError(f"dt must be > 0, got {dt}")
    generator = Generator.for_baths(rho.dim, [bath])
    stepped = rk4_step(generator, rho.matrix[None], dt)
    _check_positivity(stepped, dt)
    return FockDensity(dim=rho.dim, matrix=stepped[0])


def _integrate(
    rho0: FockDensity,
    baths: Sequence[BathSpec],
    times: Sequence[float],
    dt: float,
) -> List[np.ndarray]:
    grid = np.asarray(times, dtype=float)
    if np.any(grid < 0) or np.any(np.diff(grid) < 0):
        raise DomainError("checkpoint times must be ascending and >= 0")
    if not dt > 0:
        raise DomainError(f"dt must be > 0, got {dt}")

    generator = Generator.for_baths(rho0.dim, baths)
    stack = np.repeat(rho0.matrix[None], len(baths), axis=0)
    snapshots = []
    now = 0.0
    for checkpoint in grid:
        span = checkpoint - now
        if span > 0:
            steps = int(math.ceil(span / dt - 1e-9))
            h = span / steps
            for _ in range(steps):
                stack = rk4_step(generator, stack, h)
            now = checkpoint
            _check_positivity(stack, now)
        snapshots.append(stack.copy())
    logger.debug(f"[integrate] dim={rho0.dim}, {len(baths)} hypotheses, dt={dt}, t_end={now}")
    return snapshots


def evolve_density(
    rho0: FockDensity,
    bath: BathSpec,
    probe: ProbeKind,
    times: Sequence[float],
    dt: Optional[float] = None,
) -> List[FockDensity]:
    """States at every checkpoint time for one bath."""
    probe = _probe_of(rho0, probe)
    dt = default_step(probe, bath) if dt is None else dt
    return [FockDensity(dim=rho0.dim, matrix=stack[0]) for stack in _integrate(rho0, [bath], times, dt)]


def evolve_pair(
    rho0: FockDensity,
    bath: BathSpec,
    probe: ProbeKind,
    times: Sequence[float],
    dt: Optional[float] = None,
) -> List[Tuple[FockDensity, FockDensity]]:
    """(bosonic, fermionic) states at every checkpoint, both integrated in one stacked array."""
    probe = _probe_of(rho0, probe)
    dt = default_step(probe, bath) if dt is None else dt
    return [
        (FockDensity(dim=rho0.dim, matrix=stack[0]), FockDensity(dim=rho0.dim, matrix=stack[1]))
        for stack in _integrate(rho0, hypotheses(bath), times, dt)
    ]
