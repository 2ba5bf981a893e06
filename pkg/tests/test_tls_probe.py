# tests/test_tls_probe.py

"""
Unit tests for two-level probe dynamics, trace distance and the qubit Chernoff quantity.
"""

import math
import os
import sys

import numpy as np
import pytest

# Add parent directory to path to import project modules
parent_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if parent_dir not in sys.path:
    sys.path.insert(0, parent_dir)

from bath.rates import occupation_number
from bath.spec import BathSpec, Statistics, hypotheses
from errors import DomainError
from tls_probe.bloch import (
    BlochVector,
    TlsEquilibrium,
    bloch_from_matrix,
    bloch_to_matrix,
    evolve_bloch,
    helstrom_error,
    trace_distance_tls,
)
from tls_probe.chernoff import QubitChernoffInputs, chernoff_inputs, qubit_chernoff, qubit_chernoff_r


def matrix_power(rho: np.ndarray, r: float) -> np.ndarray:
    values, vectors = np.linalg.eigh(rho)
    return (vectors * np.clip(values, 0.0, None) ** r) @ vectors.conj().T


def random_bloch(rng: np.random.Generator) -> BlochVector:
    direction = rng.normal(size=3)
    direction /= np.linalg.norm(direction)
    return BlochVector(*(rng.uniform(0.0, 1.0) * direction))


class TestBlochVector:
    """Construction and validation of Bloch vectors."""

    def test_outside_unit_ball_rejected(self):
        """|v| > 1 is not a state."""
        with pytest.raises(DomainError):
            BlochVector(0.8, 0.0, 0.8)

    def test_pure_in_xz_plane(self):
        """Pure inputs have unit norm and no sigma_y component."""
        v = BlochVector.pure(0.3)
        assert v.norm == pytest.approx(1.0, abs=1e-12)
        assert v.sy == 0.0

    def test_matrix_conversion(self):
        """Density matrix has unit trace, is Hermitian and maps back to the same vector."""
        v = BlochVector(0.3, -0.4, 0.5)
        rho = bloch_to_matrix(v)
        assert np.trace(rho).real == pytest.approx(1.0)
        assert np.allclose(rho, rho.conj().T)
        back = bloch_from_matrix(rho)
        assert (back.sx, back.sy, back.sz) == pytest.approx((0.3, -0.4, 0.5), abs=1e-15)

    def test_equilibrium(self):
        """sz_eq = 2 N_f - 1 and -1 at zero temperature."""
        bath = BathSpec.from_beta_omega(Statistics.BOSONIC, math.log(3))
        assert TlsEquilibrium.for_bath(bath).sz_eq == pytest.approx(-0.5)
        assert TlsEquilibrium.for_bath(BathSpec(Statistics.BOSONIC, math.inf)).sz_eq == -1.0


class TestEvolveBloch:
    """Closed-form relaxation of the Bloch vector."""

    def test_initial_value(self):
        """t = 0 returns the input."""
        v0 = BlochVector(0.2, 0.3, 0.4)
        v = evolve_bloch(v0, BathSpec(Statistics.BOSONIC, 1.0), 0.0)
        assert (v.sx, v.sy, v.sz) == pytest.approx((0.2, 0.3, 0.4), abs=1e-15)

    def test_long_time_limit(self):
        """The state relaxes to (0, 0, sz_eq) for both statistics."""
        v0 = BlochVector(0.6, 0.0, 0.8)
        for statistics in Statistics:
            bath = BathSpec(statistics, 0.7)
            v = evolve_bloch(v0, bath, 200.0)
            sz_eq = 2.0 * occupation_number(Statistics.FERMIONIC, 0.7, 1.0) - 1.0
            assert (v.sx, v.sy, v.sz) == pytest.approx((0.0, 0.0, sz_eq), abs=1e-12)

    def test_equilibrium_is_fixed_point(self):
        """The Gibbs state does not move."""
        bath = BathSpec(Statistics.FERMIONIC, 0.5)
        eq = TlsEquilibrium.for_bath(bath).as_bloch()
        for t in (0.1, 1.0, 10.0):
            assert evolve_bloch(eq, bath, t).sz == pytest.approx(eq.sz, abs=1e-15)

    def test_negative_time_rejected(self):
        """Times must be non-negative."""
        with pytest.raises(DomainError):
            evolve_bloch(BlochVector.excited(), BathSpec(Statistics.BOSONIC, 1.0), -0.1)

    def test_stays_in_unit_ball(self):
        """|v(t)| <= 1 along random trajectories."""
        rng = np.random.default_rng(7)
        for _ in range(200):
            v0 = random_bloch(rng)
            bath = BathSpec(list(Statistics)[rng.integers(2)], rng.uniform(0.05, 5.0))
            v = evolve_bloch(v0, bath, rng.uniform(0.0, 10.0))
            assert v.norm <= 1.0 + 1e-12

    def test_frames_share_distance(self):
        """The lab-frame precession is common to both hypotheses and cancels in the distance."""
        bosonic, fermionic = hypotheses(BathSpec(Statistics.BOSONIC, 0.4))
        v0 = BlochVector.pure(0.2)
        for t in (0.3, 1.1, 4.0):
            lab = trace_distance_tls(evolve_bloch(v0, bosonic, t, True), evolve_bloch(v0, fermionic, t, True))
            rot = trace_distance_tls(evolve_bloch(v0, bosonic, t, False), evolve_bloch(v0, fermionic, t, False))
            assert lab == pytest.approx(rot, abs=1e-14)

    def test_frames_share_helstrom_and_chernoff(self):
        """Helstrom error and min_r Q_r agree between the lab and rotating frames."""
        bosonic, fermionic = hypotheses(BathSpec(Statistics.BOSONIC, 0.4))
        for v0 in (BlochVector.pure(0.2), BlochVector(0.3, -0.4, 0.5)):
            for t in (0.3, 1.1, 4.0):
                lab = evolve_bloch(v0, bosonic, t, True), evolve_bloch(v0, fermionic, t, True)
                rot = evolve_bloch(v0, bosonic, t, False), evolve_bloch(v0, fermionic, t, False)
                assert helstrom_error(*lab) == pytest.approx(helstrom_error(*rot), abs=1e-14)
                assert qubit_chernoff(*lab).q == pytest.approx(qubit_chernoff(*rot).q, abs=1e-10)


class TestHelstrom:
    """Helstrom error from the trace distance."""

    def test_identical_states(self):
        """Identical states cannot be told apart."""
        v = BlochVector(0.1, 0.2, 0.3)
        assert helstrom_error(v, v) == pytest.approx(0.5)

    def test_orthogonal_states(self):
        """Antipodal pure states are perfectly distinguishable."""
        assert trace_distance_tls(BlochVector.excited(), BlochVector.ground()) == pytest.approx(2.0)
        assert helstrom_error(BlochVector.excited(), BlochVector.ground()) == pytest.approx(0.0)

    def test_zero_temperature_gives_coin_flip(self):
        """At beta = inf the two hypotheses evolve identically."""
        bosonic, fermionic = hypotheses(BathSpec(Statistics.BOSONIC, math.inf))
        for t in (0.0, 0.5, 3.0):
            v0 = BlochVector.excited()
            assert helstrom_error(evolve_bloch(v0, bosonic, t), evolve_bloch(v0, fermionic, t)) == pytest.approx(0.5, abs=1e-12)


class TestQubitChernoff:
    """Chernoff quantity of two qubit states."""

    def test_matches_matrix_powers(self):
        """Closed form agrees with tr[rho_b^r rho_f^(1-r)] from eigendecompositions."""
        rng = np.random.default_rng(2019)
        for _ in range(1000):
            lb, lf = rng.uniform(0.5, 0.999, size=2)
            theta = rng.uniform(0.0, math.pi)
            r = rng.uniform(0.0, 1.0)
            v_b = BlochVector(0.0, 0.0, 2 * lb - 1)
            v_f = BlochVector((2 * lf - 1) * math.sin(theta), 0.0, (2 * lf - 1) * math.cos(theta))
            expected = np.trace(matrix_power(bloch_to_matrix(v_b), r) @ matrix_power(bloch_to_matrix(v_f), 1 - r)).real
            got = qubit_chernoff_r(QubitChernoffInputs(lb, lf, theta), r)
            assert got == pytest.approx(expected, abs=1e-12)

    def test_inputs_from_vectors(self):
        """Eigenvalues and angle are read from the Bloch vectors."""
        inputs = chernoff_inputs(BlochVector(0.0, 0.0, 0.5), BlochVector(0.5, 0.0, 0.0))
        assert inputs.lambda_b == pytest.approx(0.75)
        assert inputs.lambda_f == pytest.approx(0.75)
        assert inputs.theta == pytest.approx(math.pi / 2)

    def test_maximally_mixed_has_no_angle(self):
        """A zero Bloch vector gives theta = 0."""
        assert chernoff_inputs(BlochVector(0.0, 0.0, 0.0), BlochVector(0.3, 0.0, 0.0)).theta == 0.0

    def test_identical_states(self):
        """Q_r = 1 for identical states."""
        inputs = QubitChernoffInputs(0.8, 0.8, 0.0)
        for r in (0.1, 0.5, 0.9):
            assert qubit_chernoff_r(inputs, r) == pytest.approx(1.0)

    def test_orthogonal_pure_states(self):
        """Orthogonal pure states give Q_r = 0 for 0 < r < 1."""
        assert qubit_chernoff_r(QubitChernoffInputs(1.0, 1.0, math.pi), 0.5) == pytest.approx(0.0, abs=1e-15)

    def test_pure_states_endpoints(self):
        """0^0 = 1: at r = 0 a pure rho_b still gives tr[rho_f] = 1."""
        assert qubit_chernoff_r(QubitChernoffInputs(1.0, 0.8, 0.3), 0.0) == pytest.approx(1.0)

    def test_r_out_of_range(self):
        """r must lie in [0, 1]."""
        with pytest.raises(DomainError):
            qubit_chernoff_r(QubitChernoffInputs(0.8, 0.8, 0.0), 1.5)

    def test_invalid_inputs(self):
        """Eigenvalues below 1/2 or angles above pi are rejected."""
        with pytest.raises(DomainError):
            QubitChernoffInputs(0.3, 0.8, 0.0)
        with pytest.raises(DomainError):
            QubitChernoffInputs(0.8, 0.8, 4.0)

    def test_symmetric_optimum(self):
        """Equal eigenvalues give r* = 1/2."""
        v_b = BlochVector(0.0, 0.0, 0.6)
        v_f = BlochVector(0.6, 0.0, 0.0)
        optimum = qubit_chernoff(v_b, v_f)
        assert optimum.r_star == pytest.approx(0.5, abs=1e-5)
        assert optimum.q == pytest.approx(qubit_chernoff_r(chernoff_inputs(v_b, v_f), 0.5), abs=1e-12)

    def test_identical_states_flat(self):
        """A constant Q_r reports r* = 1/2 and Q = 1."""
        v = BlochVector(0.0, 0.2, 0.4)
        optimum = qubit_chernoff(v, v)
        assert optimum.r_star == 0.5
        assert optimum.q == pytest.approx(1.0)
