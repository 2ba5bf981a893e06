# tests/test_fock_oracle.py

"""
Unit tests for the truncated Fock-space master-equation oracle.
"""

import math
from dataclasses import replace
import os
import sys

import numpy as np
import pytest

# Add parent directory to path to import project modules
parent_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if parent_dir not in sys.path:
    sys.path.insert(0, parent_dir)

from bath.rates import characteristic_rate, occupation_number
from bath.spec import BathSpec, ProbeKind, Statistics, hypotheses
from config import settings
from errors import DomainError, StepSizeError, TruncationError
from fock_oracle.density import (
    FockDensity,
    bloch_vector,
    build_initial_state,
    check_dim,
    ladder_moments,
    required_dim,
    thermal_populations,
)
from fock_oracle.harness import OracleCase, random_cases, run_case, run_suite
from fock_oracle.lindblad import Generator, evolve_density, evolve_pair, lindblad_step
from fock_oracle.measures import chernoff_direct, trace_norm_distance
from fock_oracle.operators import annihilation, displacement
from gaussian_probe.chernoff import gaussian_chernoff_r
from gaussian_probe.states import GaussianParams, moments_to_ladder, params_to_moments
from tls_probe.bloch import BlochVector, evolve_bloch
from tls_probe.chernoff import chernoff_inputs, qubit_chernoff_r
from tls_probe.optimal import excited_state_distance, optimal_time_tls


def gibbs(dim: int, beta_omega: float) -> FockDensity:
    populations = thermal_populations(occupation_number(Statistics.BOSONIC, beta_omega, 1.0), dim)
    return FockDensity(dim=dim, matrix=np.diag(populations / populations.sum()))


class TestOperators:
    """Truncated ladder operators."""

    def test_annihilation_elements(self):
        """<n-1|a|n> = sqrt(n)."""
        a = annihilation(4)
        assert a[0, 1] == pytest.approx(1.0)
        assert a[2, 3] == pytest.approx(math.sqrt(3.0))
        assert a[1, 0] == 0.0

    def test_cached_and_read_only(self):
        """Cached operators cannot be modified in place."""
        assert annihilation(5) is annihilation(5)
        with pytest.raises(ValueError):
            annihilation(5)[0, 1] = 2.0

    def test_displacement_is_unitary(self):
        """D(alpha) is unitary on the truncated space."""
        d = displacement(0.4 - 0.3j, 32)
        assert np.allclose(d.conj().T @ d, np.identity(32), atol=1e-12)

    def test_dimension_too_small(self):
        """A single level has no ladder."""
        with pytest.raises(DomainError):
            annihilation(1)


class TestInitialStates:
    """Embedding of Bloch vectors and Gaussian parameters."""

    def test_bloch_embeds_in_two_levels(self):
        """Two-level inputs live in dim = 2 and map back to the same vector."""
        rho = build_initial_state(BlochVector(0.3, -0.2, 0.5))
        assert rho.dim == 2
        v = bloch_vector(rho)
        assert (v.sx, v.sy, v.sz) == pytest.approx((0.3, -0.2, 0.5))

    def test_ground_state(self):
        """The vacuum occupies level 0 only."""
        rho = build_initial_state(GaussianParams.ground(), dim=16)
        assert rho.matrix[0, 0] == pytest.approx(1.0)
        assert np.abs(rho.matrix).sum() == pytest.approx(1.0)

    def test_thermal_state(self):
        """nu = 3 gives geometric populations with one excitation on average."""
        rho = build_initial_state(GaussianParams(nu=3.0), dim=64)
        assert rho.populations[:4] == pytest.approx([0.5, 0.25, 0.125, 0.0625], abs=1e-12)
        assert ladder_moments(rho).n_mean == pytest.approx(1.0, abs=1e-8)

    def test_moments_match_gaussian_parameters(self):
        """Displaced squeezed thermal states carry the moments of their parameters."""
        for p in (
            GaussianParams(nu=1.5, xi=(0.6, -0.3), chi_mod=0.3, chi_phase=0.8),
            GaussianParams(nu=1.0, xi=(-0.4, 0.9), chi_mod=0.5, chi_phase=-2.1),
        ):
            measured = ladder_moments(build_initial_state(p, dim=64))
            expected = moments_to_ladder(params_to_moments(p))
            assert measured.a_mean == pytest.approx(expected.a_mean, abs=1e-8)
            assert measured.a2_mean == pytest.approx(expected.a2_mean, abs=1e-8)
            assert measured.n_mean == pytest.approx(expected.n_mean, abs=1e-8)

    def test_truncation_too_small(self):
        """A large coherent state does not fit in eight levels."""
        with pytest.raises(TruncationError, match="increase truncation"):
            build_initial_state(GaussianParams.coherent(6.0), dim=8)

    def test_required_dim(self):
        """The default truncation fits N = 1; N = 3 needs one doubling."""
        assert required_dim(1.0) == 64
        assert required_dim(3.0) == 128
        with pytest.raises(TruncationError, match="increase truncation"):
            check_dim(3.0, 8)


class TestGenerator:
    """Master-equation generator and the fixed-step integrator."""

    @pytest.mark.parametrize("dim", [2, 16])
    def test_gibbs_state_is_stationary(self, dim):
        """The Gibbs state at the bath temperature is a fixed point for both statistics."""
        rho = gibbs(dim, 0.8)
        for bath in hypotheses(BathSpec(Statistics.BOSONIC, 0.8)):
            drho = Generator.for_baths(dim, [bath])(rho.matrix[None])
            assert np.abs(drho).max() < 1e-12

    def test_trace_preserved(self):
        """One step keeps the trace at 1."""
        rho = build_initial_state(GaussianParams.coherent(1.0), dim=32)
        stepped = lindblad_step(rho, BathSpec(Statistics.FERMIONIC, 0.5), ProbeKind.QHO, 1e-3)
        assert np.trace(stepped.matrix).real == pytest.approx(1.0, abs=1e-12)

    def test_tls_trajectory(self):
        """Integrated Bloch vectors agree with the closed form over ten relaxation times."""
        v0 = BlochVector(0.6, 0.0, 0.8)
        for bath in hypotheses(BathSpec(Statistics.BOSONIC, 1.0)):
            times = list(np.linspace(1.0, 10.0, 10) / characteristic_rate(ProbeKind.TLS, bath))
            states = evolve_density(build_initial_state(v0), bath, ProbeKind.TLS, times)
            for t, rho in zip(times, states):
                expected = evolve_bloch(v0, bath, t).as_array()
                assert np.abs(bloch_vector(rho).as_array() - expected).max() < 1e-6

    def test_qho_ground_state_heating(self):
        """<a^dag a>(t) = N_b (1 - e^{-Gamma t}) for the vacuum input."""
        bath = BathSpec(Statistics.BOSONIC, 1.0)
        n_b = occupation_number(Statistics.BOSONIC, 1.0, 1.0)
        times = [0.5, 1.0, 2.0]
        pairs = evolve_pair(build_initial_state(GaussianParams.ground(), dim=64), bath, ProbeKind.QHO, times)
        for t, (rho_b, rho_f) in zip(times, pairs):
            for rho, hypothesis in ((rho_b, bath), (rho_f, bath.with_statistics(Statistics.FERMIONIC))):
                rate = characteristic_rate(ProbeKind.QHO, hypothesis)
                assert ladder_moments(rho).n_mean == pytest.approx(n_b * (1.0 - math.exp(-rate * t)), abs=1e-6)

    def test_step_too_large(self):
        """An oversized step breaks positivity and is reported."""
        with pytest.raises(StepSizeError, match="step size too large"):
            lindblad_step(build_initial_state(BlochVector.excited()), BathSpec(Statistics.BOSONIC, 1.0), ProbeKind.TLS, 10.0)

    def test_two_level_probe_needs_two_levels(self):
        """A TLS cannot be integrated on a larger truncation."""
        with pytest.raises(DomainError):
            evolve_density(gibbs(4, 1.0), BathSpec(Statistics.BOSONIC, 1.0), ProbeKind.TLS, [0.1])


class TestMeasures:
    """Trace distance and Chernoff quantity from density matrices."""

    def test_trace_distance_limits(self):
        """Identical states are at distance 0 and orthogonal ones at distance 2."""
        excited = build_initial_state(BlochVector.excited())
        ground = build_initial_state(BlochVector.ground())
        assert trace_norm_distance(excited, excited) == pytest.approx(0.0, abs=1e-15)
        assert trace_norm_distance(excited, ground) == pytest.approx(2.0)

    def test_tls_distance_at_optimal_time(self):
        """The integrated pair reproduces the closed-form distance at the optimal time."""
        bath = BathSpec.from_beta_omega(Statistics.BOSONIC, 1 / 1.5)
        t_bar = optimal_time_tls(bath)
        (rho_b, rho_f), = evolve_pair(build_initial_state(BlochVector.excited()), bath, ProbeKind.TLS, [t_bar])
        assert trace_norm_distance(rho_b, rho_f) == pytest.approx(excited_state_distance(bath, t_bar), abs=1e-6)

    def test_qubit_chernoff(self):
        """Matrix powers agree with the eigenvalue-angle formula for qubits."""
        rng = np.random.default_rng(3)
        for _ in range(50):
            vectors = []
            for _ in range(2):
                direction = rng.normal(size=3)
                vectors.append(BlochVector(*(rng.uniform(0.1, 0.9) * direction / np.linalg.norm(direction))))
            r = rng.uniform(0.05, 0.95)
            direct = chernoff_direct(build_initial_state(vectors[0]), build_initial_state(vectors[1]), r)
            assert direct == pytest.approx(qubit_chernoff_r(chernoff_inputs(*vectors), r), abs=1e-10)

    def test_gaussian_chernoff(self):
        """Matrix powers in Fock space agree with the covariance formula."""
        state_b = GaussianParams(nu=2.0, xi=(0.5, 0.2), chi_mod=0.2, chi_phase=0.4)
        state_f = GaussianParams(nu=2.4, xi=(0.1, -0.3), chi_mod=0.1, chi_phase=-0.5)
        rho_b, rho_f = build_initial_state(state_b, dim=64), build_initial_state(state_f, dim=64)
        for r in (0.3, 0.5):
            assert chernoff_direct(rho_b, rho_f, r) == pytest.approx(gaussian_chernoff_r(state_b, state_f, r), abs=1e-6)

    def test_identical_states(self):
        """Q_r = 1 for a state and itself."""
        rho = gibbs(16, 0.5)
        assert chernoff_direct(rho, rho, 0.4) == pytest.approx(1.0, abs=1e-12)

    def test_dimension_mismatch(self):
        """Both states must share the truncation."""
        with pytest.raises(DomainError):
            trace_norm_distance(gibbs(4, 1.0), gibbs(8, 1.0))

    def test_doubling_dimension_is_converged(self):
        """Going from 64 to 128 levels moves Q by less than 1e-8 at N_b = 1."""
        bath = BathSpec.from_beta_omega(Statistics.BOSONIC, math.log(2.0))
        p0 = GaussianParams.displaced_thermal(1.0, 3.0)
        values = []
        for dim in (64, 128):
            (rho_b, rho_f), = evolve_pair(build_initial_state(p0, dim=dim), bath, ProbeKind.QHO, [1.0])
            values.append(chernoff_direct(rho_b, rho_f, 0.5))
        assert abs(values[0] - values[1]) < 1e-8

    def test_doubling_dimension_is_converged_at_hottest_bath(self):
        """At N_b = 3 a coherent input moves Q by less than 1e-8 between 64 and 128 levels."""
        bath = BathSpec.from_beta_omega(Statistics.BOSONIC, math.log(4.0 / 3.0))
        assert occupation_number(Statistics.BOSONIC, bath.beta, 1.0) == pytest.approx(3.0)
        p0 = GaussianParams.coherent(1.0)
        values = []
        for dim in (64, 128):
            (rho_b, rho_f), = evolve_pair(build_initial_state(p0, dim=dim), bath, ProbeKind.QHO, [1.0])
            values.append(chernoff_direct(rho_b, rho_f, 0.5))
        assert abs(values[0] - values[1]) < 1e-8


class TestHarness:
    """Randomized comparison suite."""

    def test_cases_are_reproducible(self):
        """The same seed gives the same cases."""
        first = random_cases(ProbeKind.TLS, count=3, seed=7)
        second = random_cases(ProbeKind.TLS, count=3, seed=7)
        assert [(c.bath, c.t, c.initial) for c in first] == [(c.bath, c.t, c.initial) for c in second]

    def test_qho_cases_cover_hot_baths(self):
        """Generated harmonic cases keep the bath occupation at or below 3."""
        occupations = [
            occupation_number(Statistics.BOSONIC, case.bath.beta, 1.0)
            for case in random_cases(ProbeKind.QHO, count=20, seed=1)
        ]
        assert max(occupations) <= 3.0 + 1e-12

    def test_hot_case_doubles_truncation(self):
        """A coherent input at N_b = 3 is evaluated on 128 levels and passes."""
        bath = BathSpec.from_beta_omega(Statistics.BOSONIC, math.log(4.0 / 3.0))
        case = OracleCase("qho-hot", ProbeKind.QHO, bath, 1.0, GaussianParams.coherent(1.0), "coherent")
        result = run_case(case)
        assert result.dim == 128
        assert not result.failures()
        assert result.q_dev < 1e-5
        assert result.moment_dev < 1e-6

    def test_default_suite_passes(self):
        """The full default suite of both probes agrees with the closed forms."""
        cases = random_cases(ProbeKind.TLS) + random_cases(ProbeKind.QHO)
        report = run_suite(cases)
        assert len(report.cases) == 2 * settings.ORACLE_CASES
        assert report.passed, report.failures
        assert report.max_q_dev <= 1e-5
        assert report.tail_population <= 1e-8

    def test_small_suite_passes(self):
        """A few random cases of each probe agree with the closed forms."""
        cases = random_cases(ProbeKind.TLS, count=3) + random_cases(ProbeKind.QHO, count=2)
        report = run_suite(cases, max_workers=2)
        assert report.passed, report.failures
        assert report.max_bloch_dev < 1e-6
        assert report.max_q_dev < 1e-5
        assert len(report.cases) == 5

    def test_truncation_failure_is_reported(self):
        """A fixed truncation too small for the bath occupation becomes a failed row."""
        case = random_cases(ProbeKind.QHO, count=1, beta_omega=math.log(4.0 / 3.0))[0]
        result = run_case(case, dim=8)
        assert result.error is not None and "increase truncation" in result.error
        assert result.failures()

    def test_coarse_step_fails(self):
        """A coarse step is caught by the trajectory tolerance."""
        case = random_cases(ProbeKind.TLS, count=1, beta_omega=0.5)[0]
        case = replace(case, t=2.0)
        result = run_case(case, dt=0.25)
        assert result.failures()
