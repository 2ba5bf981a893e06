# fock_oracle/harness.py

"""
Randomized cross-check of the analytic probe results against brute-force
integration in a truncated Fock basis.
"""

import logging
import math
from concurrent import futures
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from bath.rates import occupation_number
from bath.spec import BathSpec, ProbeKind, Statistics, hypotheses
from config import settings
from errors import TaggingError
from fock_oracle.density import (
    bloch_vector,
    build_initial_state,
    check_dim,
    ladder_moments,
    required_dim,
    tail_population,
)
from fock_oracle.lindblad import evolve_pair
from fock_oracle.measures import chernoff_direct, trace_norm_distance
from gaussian_probe.chernoff import gaussian_chernoff, gaussian_chernoff_r
from gaussian_probe.dynamics import evolve_gaussian, evolve_ladder_moments
from gaussian_probe.states import GaussianParams, mean_excitation, moments_to_ladder, params_to_moments
from tls_probe.bloch import BlochVector, evolve_bloch, trace_distance_tls
from tls_probe.chernoff import chernoff_inputs, qubit_chernoff, qubit_chernoff_r

logger = logging.getLogger(__name__)

TRAJECTORY_TOLERANCE = 1e-6
FIGURE_TOLERANCE = 1e-5
TAIL_ACCEPTANCE = 1e-8
CHECKPOINT_FRACTIONS = (0.25, 0.5, 0.75, 1.0)

# Sampling ranges of the randomized suite, in units of omega0 and 1/gamma.
TLS_BETA_OMEGA = (0.3, 3.0)
QHO_BETA_OMEGA = (math.log(4.0 / 3.0), 2.5)  # N_b <= 3, so required_dim may double to 128
TLS_TIMES = (0.05, 2.0)
QHO_TIMES = (0.1, 2.0)
QHO_INPUTS = ("ground", "coherent", "thermal", "squeezed", "displaced")


@dataclass(frozen=True)
class OracleCase:
    name: str
    probe: ProbeKind
    bath: BathSpec
    t: float
    initial: Union[BlochVector, GaussianParams]
    label: str = ""


@dataclass(frozen=True)
class CaseResult:
    case: OracleCase
    dim: int = 0
    bloch_dev: float = math.nan
    moment_dev: float = math.nan
    q_dev: float = math.nan
    distance_dev: float = math.nan
    tail: float = 0.0
    error: Optional[str] = None

    def failures(self) -> List[str]:
        if self.error is not None:
            return [f"{self.case.name}: {self.error}"]
        problems = []
        for label, value, limit in (
            ("bloch deviation", self.bloch_dev, TRAJECTORY_TOLERANCE),
            ("moment deviation", self.moment_dev, TRAJECTORY_TOLERANCE),
            ("Q_r deviation", self.q_dev, FIGURE_TOLERANCE),
            ("trace distance deviation", self.distance_dev, FIGURE_TOLERANCE),
            ("tail population", self.tail, TAIL_ACCEPTANCE),
        ):
            if not math.isnan(value) and value > limit:
                problems.append(f"{self.case.name}: {label} {value:.3g} exceeds {limit:.0e}")
        return problems

    def as_row(self) -> dict:
        return {
            "case": self.case.name,
            "probe": self.case.probe.value,
            "beta_omega": self.case.bath.beta_omega,
            "t": self.case.t,
            "input": self.case.label,
            "dim": self.dim,
            "bloch_dev": self.bloch_dev,
            "moment_dev": self.moment_dev,
            "q_dev": self.q_dev,
            "distance_dev": self.distance_dev,
            "tail": self.tail,
            "error": self.error or "",
        }


@dataclass(frozen=True, eq=False)
class OracleReport:
    max_bloch_dev: float
    max_moment_dev: float
    max_q_dev: float
    max_distance_dev: float
    tail_population: float
    failures: Tuple[str, ...] = ()
    cases: pd.DataFrame = field(default_factory=pd.DataFrame)

    @property
    def passed(self) -> bool:
        return not self.failures


def _random_bloch(rng: np.random.Generator) -> BlochVector:
    direction = rng.normal(size=3)
    direction /= np.linalg.norm(direction)
    sx, sy, sz = direction * rng.uniform(0.5, 1.0)
    return BlochVector(float(sx), float(sy), float(sz))


def _random_gaussian(rng: np.random.Generator, kind: str, bath: BathSpec) -> GaussianParams:
    phase = float(rng.uniform(-math.pi, math.pi))
    if kind == "ground":
        return GaussianParams.ground()
    if kind == "coherent":
        return GaussianParams.coherent(float(rng.uniform(0.2, 1.5)), phase)
    if kind == "thermal":
        return GaussianParams.thermal(float(rng.uniform(0.0, 1.0)))
    if kind == "squeezed":
        return GaussianParams.squeezed(float(rng.uniform(0.05, 0.5)), phase)
    nu = 2.0 * occupation_number(Statistics.BOSONIC, bath.beta, bath.omega0) + 1.0
    return GaussianParams(nu=nu, xi=(float(rng.uniform(0.2, 1.0)), 0.0))


def random_cases(
    probe: ProbeKind,
    count: int = settings.ORACLE_CASES,
    seed: int = settings.ORACLE_SEED,
    beta_omega: Optional[float] = None,
    gamma: float = settings.GAMMA,
    omega0: float = settings.OMEGA0,
) -> List[OracleCase]:
    """Reproducible random (beta, t, input) cases for one probe."""
    probe = ProbeKind(probe)
    rng = np.random.default_rng([seed, 0 if probe is ProbeKind.TLS else 1])
    beta_range, time_range = (TLS_BETA_OMEGA, TLS_TIMES) if probe is ProbeKind.TLS else (QHO_BETA_OMEGA, QHO_TIMES)

    cases = []
    for index in range(count):
        x = float(rng.uniform(*beta_range)) if beta_omega is None else beta_omega
        bath = BathSpec.from_beta_omega(Statistics.BOSONIC, x, gamma, omega0)
        t = float(rng.uniform(*time_range)) / gamma
        if probe is ProbeKind.TLS:
            initial = _random_bloch(rng)
            label = f"bloch:{initial.sz:.4f},{initial.sx:.4f},{initial.sy:.4f}"
        else:
            kind = QHO_INPUTS[int(rng.integers(len(QHO_INPUTS)))]
            initial = _random_gaussian(rng, kind, bath)
            label = kind
        cases.append(OracleCase(f"{probe.value}-{index:02d}", probe, bath, t, initial, label))
    return cases


def _run_tls(case: OracleCase, dt: Optional[float]) -> CaseResult:
    v0 = case.initial
    rho0 = build_initial_state(v0)
    checkpoints = [fraction * case.t for fraction in CHECKPOINT_FRACTIONS]
    bosonic, fermionic = hypotheses(case.bath)

    bloch_dev = 0.0
    pairs = evolve_pair(rho0, case.bath, ProbeKind.TLS, checkpoints, dt)
    for t, (rho_b, rho_f) in zip(checkpoints, pairs):
        for rho, bath in ((rho_b, bosonic), (rho_f, fermionic)):
            expected = evolve_bloch(v0, bath, t).as_array()
            bloch_dev = max(bloch_dev, float(np.abs(bloch_vector(rho).as_array() - expected).max()))

    rho_b, rho_f = pairs[-1]
    v_b = evolve_bloch(v0, bosonic, case.t)
    v_f = evolve_bloch(v0, fermionic, case.t)
    r_star = qubit_chernoff(v_b, v_f).r_star
    q_expected = qubit_chernoff_r(chernoff_inputs(v_b, v_f), r_star)
    return CaseResult(
        case=case,
        dim=2,
        bloch_dev=bloch_dev,
        q_dev=abs(chernoff_direct(rho_b, rho_f, r_star) - q_expected),
        distance_dev=abs(trace_norm_distance(rho_b, rho_f) - trace_distance_tls(v_b, v_f)),
    )


def _run_qho(case: OracleCase, dim: Optional[int], dt: Optional[float]) -> CaseResult:
    p0 = case.initial
    load = max(occupation_number(Statistics.BOSONIC, case.bath.beta, case.bath.omega0), mean_excitation(p0))
    if dim is None:
        dim = required_dim(load)
    else:
        check_dim(load, dim)

    rho0 = build_initial_state(p0, dim)
    ladder0 = moments_to_ladder(params_to_moments(p0))
    checkpoints = [fraction * case.t for fraction in CHECKPOINT_FRACTIONS]
    bosonic, fermionic = hypotheses(case.bath)

    moment_dev = 0.0
    pairs = evolve_pair(rho0, case.bath, ProbeKind.QHO, checkpoints, dt)
    for t, (rho_b, rho_f) in zip(checkpoints, pairs):
        for rho, bath in ((rho_b, bosonic), (rho_f, fermionic)):
            expected = evolve_ladder_moments(ladder0, bath, t, lab_frame=True)
            measured = ladder_moments(rho)
            moment_dev = max(
                moment_dev,
                abs(measured.a_mean - expected.a_mean),
                abs(measured.a2_mean - expected.a2_mean),
                abs(measured.n_mean - expected.n_mean),
            )

    rho_b, rho_f = pairs[-1]
    state_b = evolve_gaussian(p0, bosonic, case.t, lab_frame=True)
    state_f = evolve_gaussian(p0, fermionic, case.t, lab_frame=True)
    r_star = gaussian_chernoff(state_b, state_f).r_star
    q_expected = gaussian_chernoff_r(state_b, state_f, r_star)
    return CaseResult(
        case=case,
        dim=dim,
        moment_dev=moment_dev,
        q_dev=abs(chernoff_direct(rho_b, rho_f, r_star) - q_expected),
        tail=max(tail_population(rho_b), tail_population(rho_f)),
    )


def run_case(case: OracleCase, dim: Optional[int] = None, dt: Optional[float] = None) -> CaseResult:
    """Compares one case; domain failures (truncation, step size) are reported, not raised."""
    try:
        if case.probe is ProbeKind.TLS:
            result = _run_tls(case, dt)
        else:
            result = _run_qho(case, dim, dt)
    except TaggingError as e:
        logger.warning(f"[run_case] {case.name} failed: {e}")
        return CaseResult(case=case, dim=dim or 0, error=str(e))
    logger.debug(f"[run_case] {case.name}: {result.as_row()}")
    return result


def _max(values: Sequence[float]) -> float:
    finite = [value for value in values if not math.isnan(value)]
    return max(finite) if finite else 0.0


def run_suite(
    cases: Sequence[OracleCase],
    dim: Optional[int] = None,
    dt: Optional[float] = None,
    max_workers: int = settings.MAX_WORKERS,
) -> OracleReport:
    """Runs independent cases on a thread pool; rows keep the submission order."""
    with futures.ThreadPoolExecutor(max_workers=max_workers) as pool:
        results = list(pool.map(lambda case: run_case(case, dim, dt), cases))

    failures = tuple(problem for result in results for problem in result.failures())
    report = OracleReport(
        max_bloch_dev=_max([result.bloch_dev for result in results]),
        max_moment_dev=_max([result.moment_dev for result in results]),
        max_q_dev=_max([result.q_dev for result in results]),
        max_distance_dev=_max([result.distance_dev for result in results]),
        tail_population=_max([result.tail for result in results]),
        failures=failures,
        cases=pd.DataFrame([result.as_row() for result in results]),
    )
    logger.info(f"[run_suite] {len(results)} cases, {len(failures)} failures")
    return report
