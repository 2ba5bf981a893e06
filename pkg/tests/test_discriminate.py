# tests/test_discriminate.py

"""
Unit tests for the shared minimizers, error bounds and curve assembly.
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

from discriminate.bounds import helstrom_from_distance, n_copy_bound
from discriminate.curves import assemble_curve
from discriminate.minimizers import (
    golden_section,
    minimize_chernoff_over_r,
    minimize_over_time,
    scan_and_refine,
)
from errors import DomainError, NonFiniteObjectiveError


class TestGoldenSection:
    """Golden-section search and the pre-scan wrapper."""

    def test_quadratic(self):
        """Finds the vertex of a parabola."""
        x, fx = golden_section(lambda x: (x - 0.3) ** 2, 0.0, 1.0)
        assert x == pytest.approx(0.3, abs=1e-9)
        assert fx == pytest.approx(0.0, abs=1e-18)

    def test_reversed_bracket(self):
        """The bracket may be given in either order."""
        x, _ = golden_section(lambda x: (x - 0.3) ** 2, 1.0, 0.0)
        assert x == pytest.approx(0.3, abs=1e-9)

    def test_global_minimum_among_several(self):
        """Every pre-scan local minimum is refined and the lowest wins."""
        f = lambda x: (x - 0.2) ** 2 * (x - 0.8) ** 2 + 0.01 * x
        x, _, flat = scan_and_refine(f, 0.0, 1.0)
        assert not flat
        assert x == pytest.approx(0.186, abs=0.005)

    def test_flat_objective(self):
        """A constant objective is reported as flat."""
        _, value, flat = scan_and_refine(lambda x: 2.0, 0.0, 1.0)
        assert flat and value == 2.0

    def test_non_finite_objective(self):
        """NaN values abort the search."""
        with pytest.raises(NonFiniteObjectiveError):
            scan_and_refine(lambda x: math.nan, 0.0, 1.0)

    def test_empty_interval(self):
        """hi must exceed lo."""
        with pytest.raises(DomainError):
            scan_and_refine(lambda x: x, 1.0, 1.0)


class TestChernoffMinimizer:
    """min over r of Q_r."""

    def test_constant(self):
        """A constant Q_r gives r* = 1/2."""
        optimum = minimize_chernoff_over_r(lambda r: 1.0)
        assert optimum == (0.5, 1.0)

    def test_asymmetric(self):
        """A convex Q_r is minimized at its vertex."""
        optimum = minimize_chernoff_over_r(lambda r: 1.0 - r * (1.0 - r) * (1.0 + r))
        assert optimum.r_star == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-6)


class TestTimeMinimizer:
    """Bracketed minimization over [0, t_max]."""

    def test_interior(self):
        """An interior optimum carries no flags."""
        optimum = minimize_over_time(lambda t: (t - 2.0) ** 2, 10.0)
        assert optimum.t_bar == pytest.approx(2.0, abs=1e-8)
        assert not optimum.boundary and not optimum.degenerate

    def test_boundary(self):
        """A monotone objective ends on the window edge."""
        optimum = minimize_over_time(lambda t: -t, 5.0)
        assert optimum.boundary
        assert optimum.t_bar == pytest.approx(5.0, abs=1e-8)

    def test_degenerate(self):
        """A flat objective is reported at t = 0."""
        optimum = minimize_over_time(lambda t: 0.0, 5.0)
        assert optimum.degenerate
        assert optimum.t_bar == 0.0

    def test_empty_window(self):
        """t_max must be positive."""
        with pytest.raises(DomainError):
            minimize_over_time(lambda t: t, 0.0)


class TestBounds:
    """Single-shot and N-copy error bounds."""

    def test_n_copy_bound(self):
        """Q^N / 2 for N copies."""
        assert n_copy_bound(1.0, 7).bound == 0.5
        assert n_copy_bound(0.6, 1).bound == pytest.approx(0.3)
        assert n_copy_bound(0.5, 10).bound == pytest.approx(1.0 / 2048.0)

    def test_n_copy_bound_decreasing(self):
        """More copies never hurt."""
        bounds = [n_copy_bound(0.9, n).bound for n in range(1, 20)]
        assert all(a > b for a, b in zip(bounds, bounds[1:]))

    @pytest.mark.parametrize("q, n", [(1.2, 1), (-0.1, 1), (0.5, 0), (0.5, 1.5), (0.5, True)])
    def test_invalid(self, q, n):
        """Q must lie in [0, 1] and N must be a positive integer."""
        with pytest.raises(DomainError):
            n_copy_bound(q, n)

    def test_helstrom_from_distance(self):
        """P_err = (1 - D/2)/2."""
        assert helstrom_from_distance(0.0) == 0.5
        assert helstrom_from_distance(2.0) == 0.0
        assert helstrom_from_distance(1.0) == pytest.approx(0.25)
        with pytest.raises(DomainError):
            helstrom_from_distance(2.5)


class TestCurveAssembly:
    """Sampling of min_r Q_r on a time grid."""

    def test_columns(self):
        """Helstrom is included only when requested."""
        curve = assemble_curve([0.0, 1.0], lambda t: (lambda r: 1.0 - 0.1 * t * r * (1 - r)))
        assert curve.helstrom is None
        assert list(curve.to_frame().columns) == ["t", "Q", "Q/2", "r_star"]
        with_helstrom = assemble_curve([0.0, 1.0], lambda t: (lambda r: 1.0), lambda t: 0.5)
        assert list(with_helstrom.to_frame().columns) == ["t", "helstrom", "Q", "Q/2", "r_star"]

    def test_values(self):
        """Q and Q/2 follow the minimum of Q_r."""
        curve = assemble_curve([0.0, 1.0], lambda t: (lambda r: 1.0 - 0.4 * t * r * (1 - r)))
        assert curve.chernoff_q == pytest.approx([1.0, 0.9])
        assert curve.rescaled_q == pytest.approx([0.5, 0.45])
        assert curve.r_star[1] == pytest.approx(0.5, abs=1e-6)

    def test_time_unit(self):
        """Times can be reported in units of a relaxation time."""
        curve = assemble_curve([0.0, 2.0], lambda t: (lambda r: 1.0))
        assert np.allclose(curve.to_frame(time_unit=2.0)["t"], [0.0, 1.0])

    @pytest.mark.parametrize("times", [[], [1.0, 0.5], [-1.0, 0.0]])
    def test_invalid_grid(self, times):
        """Grids must be non-empty, non-negative and ascending."""
        with pytest.raises(DomainError):
            assemble_curve(times, lambda t: (lambda r: 1.0))
