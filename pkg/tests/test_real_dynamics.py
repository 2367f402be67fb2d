"""Tests for the real dynamics module."""

import math

import numpy as np
import pytest

from dynamics.maps import TWO_PI, eval_f
from dynamics.real import (
    FixedPointRecord,
    check_fixed_point_record,
    eta_sequence,
    find_escaping_negative,
    find_julia_preimage,
    find_low_fixed_points,
    find_real_fixed_points,
    multiplier,
    paired_real_orbits,
)
from errors import PreconditionViolatedError
from verify.verifier import ordering_start


@pytest.fixture(scope="module")
def witness():
    return find_escaping_negative(0.1)


class TestFixedPoints:
    """Tests for the real fixed points of f."""

    def test_first_window(self):
        """Window 1 holds 2π + η₂ and 4π − η₃ with both gaps in (0, π/2)."""
        left, right = find_real_fixed_points(1)
        assert TWO_PI < left.x < right.x < 2 * TWO_PI
        assert 0 < left.x - TWO_PI < math.pi / 2
        assert 0 < 2 * TWO_PI - right.x < math.pi / 2

    def test_defining_equation_residual(self):
        """cos x − 1 + 2π/x vanishes at the first root of window 1."""
        x = find_real_fixed_points(1)[0].x
        assert abs(math.cos(x) - 1 + TWO_PI / x) < 1e-12

    def test_multipliers_far_out(self):
        """Both fixed points of window 50 have multipliers beyond 2π − 1."""
        for record in find_real_fixed_points(50):
            assert abs(record.multiplier) > TWO_PI - 1

    def test_every_window_record_valid(self):
        """Windows 1..100 each hold two fixed points satisfying their invariants."""
        for n in range(1, 101):
            records = find_real_fixed_points(n, samples=2000)
            assert len(records) == 2
            for record in records:
                assert check_fixed_point_record(record) is None
                assert abs(float(eval_f(record.x).real) - record.x) < 1e-10
                assert record.x - n * TWO_PI > 1e-6
                assert (n + 1) * TWO_PI - record.x > 1e-6

    def test_low_fixed_points(self):
        """The fixed points in (0, 2π) are π and 4π/3."""
        low, high = find_low_fixed_points()
        assert low.x == pytest.approx(math.pi, abs=1e-12)
        assert high.x == pytest.approx(4 * math.pi / 3, abs=1e-12)
        assert low.multiplier == pytest.approx(-1.0, abs=1e-12)
        assert high.is_repelling

    def test_window_index_validated(self):
        with pytest.raises(PreconditionViolatedError):
            find_real_fixed_points(0)

    def test_bad_record_reported(self):
        """A record that is not a fixed point is flagged."""
        record = FixedPointRecord(x=10.0, multiplier=multiplier(10.0), interval_index=1, eta=10.0 - TWO_PI)
        assert check_fixed_point_record(record) is not None


class TestMultiplier:
    """Tests for f′ on the real line."""

    def test_at_pi(self):
        assert multiplier(math.pi) == pytest.approx(-1.0, abs=1e-12)

    def test_at_zero(self):
        assert multiplier(0.0) == 1.0

    def test_at_four_thirds_pi(self):
        """f′(4π/3) = −1/2 + (4π/3)(√3/2), which is repelling."""
        expected = -0.5 + (4 * math.pi / 3) * (math.sqrt(3) / 2)
        assert multiplier(4 * math.pi / 3) == pytest.approx(expected, rel=1e-12)
        assert abs(expected) > 1


class TestEtaSequence:
    """Tests for the gaps η_k."""

    def test_all_in_range(self):
        etas = eta_sequence(20, samples=2000)
        assert len(etas) == 19
        assert all(0 < eta < math.pi / 2 for eta in etas)

    def test_gaps_shrink(self):
        """η_200 < η_2."""
        etas = eta_sequence(200, samples=2000)
        assert etas[-1] < etas[0]


class TestEscapeWitness:
    """Tests for escaping points near 0 and the Julia preimage."""

    def test_witness_found(self, witness):
        """δ = 0.1 yields a witness with n ≥ 2."""
        assert -0.1 < witness.x0 < 0
        assert witness.n >= 2
        assert witness.value <= witness.n * TWO_PI - math.pi / 2

    @pytest.mark.parametrize("delta", [0.1, 0.5, 1e-3])
    def test_witness_strictly_inside(self, delta):
        """x₀ lies in the open interval (−δ, 0)."""
        x0 = find_escaping_negative(delta).x0
        assert -delta < x0 < 0

    def test_witness_reverified(self, witness):
        assert witness.reverify()

    def test_delta_validated(self):
        with pytest.raises(PreconditionViolatedError):
            find_escaping_negative(2.0)

    def test_preimage_of_repelling_fixed_point(self, witness):
        """f^n maps some ξ in (x₀, 0) onto the upper fixed point of window n−1."""
        preimage = find_julia_preimage(witness)
        assert witness.x0 < preimage.xi < 0
        assert witness.n * TWO_PI - math.pi / 2 < preimage.fixed_point < witness.n * TWO_PI
        assert preimage.residual < 1e-8


class TestPairedOrbits:
    """Tests for the paired real orbits x_n, y_n."""

    def test_shapes_and_order(self):
        """ξ_n < η_n along the whole orbit."""
        orbits = paired_real_orbits(5, ordering_start(5), 50)
        assert orbits.steps == 50
        assert np.all(orbits.xi < orbits.eta)
        assert np.all(orbits.xi > 0)

    def test_absolute_coordinates(self):
        orbits = paired_real_orbits(5, ordering_start(5), 3)
        assert orbits.absolute_y(0) == pytest.approx(ordering_start(5), rel=1e-15)
        assert orbits.absolute_x(2) == pytest.approx(orbits.xi[2] + 14 * math.pi, rel=1e-15)

    def test_start_outside_trap(self):
        """y₀ must lie in D▷_m ∩ ℝ."""
        with pytest.raises(PreconditionViolatedError):
            paired_real_orbits(5, 10 * math.pi + 0.5, 10)
