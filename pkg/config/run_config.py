# bath-tagging/config/run_config.py

"""
Per-run configuration assembled from the command line, plus the parser for the
--input state descriptors.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from bath.rates import occupation_number
from bath.spec import BathSpec, ProbeKind, Statistics
from config import settings
from errors import TaggingError, UsageError
from gaussian_probe.states import GaussianParams
from tls_probe.bloch import BlochVector

InitialState = Union[BlochVector, GaussianParams]

FRAMES = ("rotating", "lab")
STATISTICS_CHOICES = ("bosonic", "fermionic", "both")


def parse_beta_omega(text: str) -> float:
    """Parses beta*omega0; 'inf' selects zero temperature."""
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"invalid beta*omega0 '{text}'")
    if math.isnan(value) or value < 0:
        raise UsageError(f"beta*omega0 must be >= 0 or 'inf', got '{text}'")
    return value


def parse_interval(text: str) -> Tuple[float, float]:
    """Parses 'LO:HI' into a pair with 0 < LO < HI."""
    try:
        lo, hi = (float(part) for part in text.split(":"))
    except ValueError:
        raise UsageError(f"invalid interval '{text}', expected LO:HI")
    if not 0 < lo < hi:
        raise UsageError(f"interval must satisfy 0 < LO < HI, got '{text}'")
    return lo, hi


def _number(text: str, descriptor: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"invalid number '{text}' in input descriptor '{descriptor}'")


def parse_input(descriptor: str, probe: ProbeKind, bath: BathSpec) -> InitialState:
    """
    TLS: excited | ground | bloch:sz[,sx]
    QHO: ground | coherent:amp | thermal:n | squeezed:r | displaced:amp
    """
    probe = ProbeKind(probe)
    kind, _, argument = descriptor.partition(":")
    kind = kind.strip().lower()

    try:
        if probe is ProbeKind.TLS:
            if kind == "excited" and not argument:
                return BlochVector.excited()
            if kind == "ground" and not argument:
                return BlochVector.ground()
            if kind == "bloch" and argument:
                parts = [_number(part, descriptor) for part in argument.split(",")]
                if len(parts) == 1:
                    return BlochVector.pure(parts[0])
                if len(parts) == 2:
                    return BlochVector(sx=parts[1], sy=0.0, sz=parts[0])
        else:
            if kind == "ground" and not argument:
                return GaussianParams.ground()
            if kind == "coherent" and argument:
                return GaussianParams.coherent(_number(argument, descriptor))
            if kind == "thermal" and argument:
                return GaussianParams.thermal(_number(argument, descriptor))
            if kind == "squeezed" and argument:
                return GaussianParams.squeezed(_number(argument, descriptor))
            if kind == "displaced" and argument:
                nu = 2.0 * occupation_number(Statistics.BOSONIC, bath.beta, bath.omega0) + 1.0
                return GaussianParams.displaced_thermal(_number(argument, descriptor), nu)
    except UsageError:
        raise
    except TaggingError as e:
        raise UsageError(f"invalid input descriptor '{descriptor}': {e}")

    raise UsageError(f"input descriptor '{descriptor}' is not valid for the {probe.value} probe")


def default_input(probe: ProbeKind) -> str:
    return "excited" if ProbeKind(probe) is ProbeKind.TLS else "ground"


@dataclass(frozen=True)
class RunConfig:
    probe: ProbeKind = ProbeKind.TLS
    beta_omega: Optional[float] = None
    statistics: str = "both"
    gamma: float = settings.GAMMA
    omega0: float = settings.OMEGA0
    t_max: Optional[float] = None
    steps: int = 201
    input: Optional[str] = None
    out: Optional[str] = None
    precision: int = settings.PRECISION
    frame: str = "rotating"
    helstrom: bool = False
    dim: Optional[int] = None
    dt: Optional[float] = None
    cases: int = settings.ORACLE_CASES
    seed: int = settings.ORACLE_SEED
    sweep: Optional[Tuple[float, float]] = None
    max_workers: int = settings.MAX_WORKERS
    probes: Tuple[ProbeKind, ...] = (ProbeKind.TLS, ProbeKind.QHO)

    def __post_init__(self) -> None:
        object.__setattr__(self, "probe", ProbeKind(self.probe))
        if self.steps < 2:
            raise UsageError(f"--steps must be >= 2, got {self.steps}")
        if self.t_max is not None and not self.t_max > 0:
            raise UsageError(f"--t-max must be > 0, got {self.t_max}")
        if self.precision < 1:
            raise UsageError(f"--precision must be >= 1, got {self.precision}")
        if self.frame not in FRAMES:
            raise UsageError(f"--frame must be one of {FRAMES}, got {self.frame}")
        if self.statistics not in STATISTICS_CHOICES:
            raise UsageError(f"--statistics must be one of {STATISTICS_CHOICES}, got {self.statistics}")
        if self.dim is not None and self.dim < 2:
            raise UsageError(f"--dim must be >= 2, got {self.dim}")
        if self.dt is not None and not self.dt > 0:
            raise UsageError(f"--dt must be > 0, got {self.dt}")
        if self.cases < 1:
            raise UsageError(f"--cases must be >= 1, got {self.cases}")
        if self.max_workers < 1:
            raise UsageError(f"--max-workers must be >= 1, got {self.max_workers}")

    @property
    def lab_frame(self) -> bool:
        return self.frame == "lab"

    @property
    def input_descriptor(self) -> str:
        return self.input or default_input(self.probe)

    def bath(self, statistics: Statistics = Statistics.BOSONIC) -> BathSpec:
        if self.beta_omega is None:
            raise UsageError("a bath temperature is required: pass --beta-omega or --inv-beta-omega")
        try:
            return BathSpec.from_beta_omega(statistics, self.beta_omega, self.gamma, self.omega0)
        except TaggingError as e:
            raise UsageError(str(e))

    def initial_state(self) -> InitialState:
        return parse_input(self.input_descriptor, self.probe, self.bath())

    def times(self, t_max: float) -> np.ndarray:
        return np.linspace(0.0, self.t_max or t_max, self.steps)


def parse_amplitude(descriptor: str) -> float:
    """Displacement amplitude of a coherent:amp or displaced:amp descriptor."""
    kind, _, argument = descriptor.partition(":")
    if kind.strip().lower() not in ("coherent", "displaced") or not argument:
        raise UsageError(f"expected coherent:amp or displaced:amp, got '{descriptor}'")
    return _number(argument, descriptor)
