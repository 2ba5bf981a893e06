# gaussian_probe/chernoff.py

"""
Chernoff quantity of two single-mode Gaussian states.

A Gaussian state raised to a power r is again Gaussian up to normalization:
rho^r = N_r rho', where rho' keeps the displacement and squeezing and has the
thermal parameter nu_r. With N = (nu - 1)/2,

    nu_r = ((N + 1)^r + N^r) / ((N + 1)^r - N^r),    N_r = 1 / ((N + 1)^r - N^r),

and Q_r = 2 N_{b,r} N_{f,1-r} exp(-d^T M^{-1} d) / sqrt(det M) with
M = (nu_{b,r}/nu_b) sigma_b + (nu_{f,1-r}/nu_f) sigma_f and d = R_b - R_f.
"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from bath.rates import characteristic_rate, occupation_number
from bath.spec import BathSpec, ProbeKind, Statistics, hypotheses
from discriminate.minimizers import ChernoffOptimum, minimize_chernoff_over_r
from errors import ClosedFormPreconditionError, DomainError, SingularCovarianceError
from gaussian_probe.states import GaussianParams, params_to_moments

logger = logging.getLogger(__name__)

CLOSED_FORM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ChernoffTerms:
    nu_r_b: float
    nu_r_f: float
    norm_r_b: float
    norm_r_f: float
    delta: np.ndarray


def power_coefficients(nu: float, r: float) -> Tuple[float, float]:
    """(nu_r, N_r) of rho^r for a state with thermal parameter nu."""
    n = max(0.0, 0.5 * (nu - 1.0))
    upper = (n + 1.0) ** r
    lower = n ** r
    gap = upper - lower
    return (upper + lower) / gap, 1.0 / gap


def _check_r(r: float) -> None:
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")


def chernoff_terms(state_b: GaussianParams, state_f: GaussianParams, r: float) -> ChernoffTerms:
    _check_r(r)
    nu_r_b, norm_r_b = power_coefficients(state_b.nu, r)
    nu_r_f, norm_r_f = power_coefficients(state_f.nu, 1.0 - r)
    return ChernoffTerms(
        nu_r_b=nu_r_b,
        nu_r_f=nu_r_f,
        norm_r_b=norm_r_b,
        norm_r_f=norm_r_f,
        delta=state_b.displacement - state_f.displacement,
    )


def gaussian_chernoff_r(state_b: GaussianParams, state_f: GaussianParams, r: float) -> float:
    terms = chernoff_terms(state_b, state_f, r)
    sigma_b = params_to_moments(state_b).sigma
    sigma_f = params_to_moments(state_f).sigma

    m = (terms.nu_r_b / state_b.nu) * sigma_b + (terms.nu_r_f / state_f.nu) * sigma_f
    det = float(np.linalg.det(m))
    if not (math.isfinite(det) and det > 0.0):
        raise SingularCovarianceError(f"covariance sum is singular: det = {det}")

    exponent = float(terms.delta @ np.linalg.solve(m, terms.delta))
    return 2.0 * terms.norm_r_b * terms.norm_r_f * math.exp(-exponent) / math.sqrt(det)


def gaussian_chernoff(state_b: GaussianParams, state_f: GaussianParams) -> ChernoffOptimum:
    """Q = min_r Q_r for two Gaussian states, with the minimizing r."""
    return minimize_chernoff_over_r(lambda r: gaussian_chernoff_r(state_b, state_f, r))


def displacement_amplitude(xi0: Union[float, Sequence[float]]) -> float:
    """|xi0| for a scalar amplitude or a two-component displacement."""
    if np.ndim(xi0) == 0:
        return abs(float(xi0))
    return float(np.linalg.norm(np.asarray(xi0, dtype=float)))


def _closed_form_amplitude(
    xi0: Union[float, Sequence[float], GaussianParams],
    bath: BathSpec,
) -> float:
    if isinstance(xi0, GaussianParams):
        expected_nu = 2.0 * occupation_number(Statistics.BOSONIC, bath.beta, bath.omega0) + 1.0
        if xi0.chi_mod != 0.0 or abs(xi0.nu - expected_nu) > CLOSED_FORM_TOLERANCE * expected_nu:
            raise ClosedFormPreconditionError(
                "closed form precondition violated: the input must be a displaced thermal state "
                f"at the bath temperature (nu = {expected_nu}, no squeezing), got {xi0}"
            )
        return float(np.linalg.norm(xi0.displacement))
    return displacement_amplitude(xi0)


def displacement_gap(amplitude: float, bath: BathSpec, t: float) -> float:
    """|d(t)| = |xi0| (e^{-Gamma_f t/2} - e^{-Gamma_b t/2}) for the displaced thermal input."""
    if t < 0:
        raise DomainError(f"time must be >= 0, got {t}")
    bosonic, fermionic = hypotheses(bath)
    rate_b = characteristic_rate(ProbeKind.QHO, bosonic)
    rate_f = characteristic_rate(ProbeKind.QHO, fermionic)
    return amplitude * (math.exp(-0.5 * rate_f * t) - math.exp(-0.5 * rate_b * t))


def chernoff_closed_form(
    xi0: Union[float, Sequence[float], GaussianParams],
    bath: BathSpec,
    t: float,
    r: float,
) -> float:
    """
    Q_r = exp{-(|d|^2/2)(1 + 2N - N f_r)} for a displaced thermal input at the bath temperature,
    where N f_r = N^{1-r}(1 + N)^r + N^r(1 + N)^{1-r}. At r = 1/2 the bracket is
    (sqrt(N + 1) - sqrt(N))^2.
    """
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"r must lie in [0, 1], got {r}")
    amplitude = _closed_form_amplitude(xi0, bath)
    n = occupation_number(Statistics.BOSONIC, bath.beta, bath.omega0)
    gap = displacement_gap(amplitude, bath, t)

    n_f_r = n ** (1.0 - r) * (1.0 + n) ** r + n ** r * (1.0 + n) ** (1.0 - r)
    return math.exp(-0.5 * gap * gap * (1.0 + 2.0 * n - n_f_r))
