"""Tests for the Hausdorff and hyperbolic metrics."""

import math

import numpy as np
import pytest

from basin.grid import PointSet
from errors import EmptySetError, NotReachedError, OutsideFrameError, PreconditionViolatedError
from metrics.contraction import contraction_experiment, distance_bound, growth_lower_bound, wandering_contraction
from metrics.hausdorff import hausdorff_distance, nearest_distances
from metrics.hyperbolic import DiscFrame, HalfPlaneFrame, hyperbolic_distance_real
from verify.regions import DiscSpec
from verify.verifier import ordering_start


def random_set(seed: int, size: int) -> PointSet:
    rng = np.random.default_rng(seed)
    return PointSet(rng.normal(size=size) + 1j * rng.normal(size=size), f"seed {seed}")


@pytest.fixture(scope="module")
def contraction_trace():
    return contraction_experiment(5, 18 * math.pi + 1, 1000)


class TestHausdorff:
    """Tests for the Hausdorff distance on point sets."""

    def test_identical_sets(self):
        a = random_set(1, 50)
        assert hausdorff_distance(a, a).distance == 0.0

    def test_known_value(self):
        """d_H({0}, {0, 3}) = 3, attained at 3."""
        a = PointSet(np.array([0j]), "a")
        b = PointSet(np.array([0j, 3 + 0j]), "b")
        result = hausdorff_distance(a, b)
        assert result.distance == 3.0
        assert result.witness_a_to_b.distance == 0.0
        assert result.witness_b_to_a.point == 3 + 0j

    def test_symmetric(self):
        a, b = random_set(2, 80), random_set(3, 120)
        assert hausdorff_distance(a, b).distance == hausdorff_distance(b, a).distance

    def test_methods_bit_identical(self):
        """Brute force and the k-d tree kernel agree exactly."""
        a, b = random_set(4, 300), random_set(5, 200)
        brute = hausdorff_distance(a, b, method="brute")
        bucketed = hausdorff_distance(a, b, method="bucketed")
        assert brute.distance == bucketed.distance
        assert brute.witness_a_to_b == bucketed.witness_a_to_b
        assert np.array_equal(
            nearest_distances(a.points, b.points, "brute"),
            nearest_distances(a.points, b.points, "bucketed"),
        )

    def test_worker_count_irrelevant(self):
        a, b = random_set(6, 400), random_set(7, 400)
        assert hausdorff_distance(a, b, workers=1) == hausdorff_distance(a, b, workers=4)

    def test_triangle_inequality(self):
        for seed in range(0, 60, 3):
            a, b, c = random_set(seed, 40), random_set(seed + 1, 50), random_set(seed + 2, 60)
            ab = hausdorff_distance(a, b).distance
            bc = hausdorff_distance(b, c).distance
            ac = hausdorff_distance(a, c).distance
            assert ac <= ab + bc + 1e-12

    def test_empty_set(self):
        with pytest.raises(EmptySetError):
            hausdorff_distance(PointSet(np.array([]), "empty"), random_set(1, 3))

    def test_unknown_method(self):
        with pytest.raises(PreconditionViolatedError):
            hausdorff_distance(random_set(1, 3), random_set(2, 3), method="grid")


class TestHyperbolicFrames:
    """Tests for distances in half-planes and discs."""

    def test_halfplane_log_ratio(self):
        frame = HalfPlaneFrame(1.0)
        assert hyperbolic_distance_real(frame, 2.0, 1.0 + math.e) == pytest.approx(1.0, rel=1e-15)

    def test_halfplane_density(self):
        assert HalfPlaneFrame(2.0).density(4.0) == 0.5

    def test_zero_and_symmetry(self):
        frame = HalfPlaneFrame(0.5)
        assert hyperbolic_distance_real(frame, 3.0, 3.0) == 0.0
        assert hyperbolic_distance_real(frame, 3.0, 7.0) == hyperbolic_distance_real(frame, 7.0, 3.0)

    def test_disc_matches_closed_form(self):
        """From the center, d(c, c + s) = log((r + s)/(r − s))."""
        frame = DiscFrame(0.5, 0.5)
        for s in (0.01, 0.2, 0.45):
            expected = math.log((0.5 + s) / (0.5 - s))
            assert abs(frame.distance(0.5, 0.5 + s) - expected) < 1e-12

    def test_disc_reciprocal_frame(self):
        """D_n is carried onto H_{3nπ}."""
        frame, reciprocal = DiscFrame.from_spec(DiscSpec.trap(4)).to_halfplane()
        assert frame.a == pytest.approx(12 * math.pi, rel=1e-14)
        assert reciprocal(1 / (12 * math.pi)) == pytest.approx(12 * math.pi, rel=1e-14)

    def test_boundary_point_rejected(self):
        with pytest.raises(OutsideFrameError):
            hyperbolic_distance_real(HalfPlaneFrame(1.0), 1.0, 2.0)
        with pytest.raises(OutsideFrameError):
            DiscFrame(0.5, 0.5).distance(0.0, 0.5)

    def test_disc_needs_real_center(self):
        with pytest.raises(PreconditionViolatedError):
            DiscFrame(1j, 1.0)


class TestContraction:
    """Tests for contraction along real orbits."""

    def test_orbit_increases(self, contraction_trace):
        assert np.all(np.diff(contraction_trace.t) > 0)
        assert np.all(contraction_trace.t >= contraction_trace.lower_bounds)

    def test_distances_within_bounds(self, contraction_trace):
        assert np.all(contraction_trace.distances[1:] < contraction_trace.distance_bounds[1:])
        assert np.isnan(contraction_trace.distance_bounds[0])

    def test_contracts(self, contraction_trace):
        """Both the hyperbolic steps and the distance to 2(m+n)π shrink."""
        assert contraction_trace.distances[-1] < contraction_trace.distances[1]
        assert np.all(np.diff(contraction_trace.boundary_distances) < 0)

    def test_late_steps_small(self, contraction_trace):
        """After a thousand maps the hyperbolic step is below 0.01."""
        assert contraction_trace.distances[999] < 0.01

    def test_bound_formulas(self):
        assert distance_bound(5, 1) == pytest.approx((11 / 8) * 6 / ((1 / 3) * 10))
        assert growth_lower_bound(5, 0) == pytest.approx(18 * math.pi)

    def test_start_outside_halfplane(self):
        with pytest.raises(PreconditionViolatedError):
            contraction_experiment(5, 18 * math.pi, 10)

    def test_wandering_bounds_hold(self):
        trace = wandering_contraction(5, ordering_start(5), 50)
        assert len(trace.bounds) == 50
        assert np.all(trace.direct > 0)
        assert np.all(trace.direct <= trace.bounds + 1e-12)
        assert trace.final_bound > 0

    def test_wandering_bound_below_target(self):
        """From y₀ = 10π + 1/(60π), a thousand steps bring the bound below 0.01."""
        trace = wandering_contraction(5, ordering_start(5), 1000, epsilon=0.01)
        assert trace.final_bound < 0.01
        assert np.all(trace.bounds >= 0)

    def test_wandering_target_not_reached(self):
        with pytest.raises(NotReachedError):
            wandering_contraction(5, ordering_start(5), 5, epsilon=1e-12)
