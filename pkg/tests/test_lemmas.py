"""Tests for the sampled inequality checks."""

import math

import numpy as np
import pytest

from errors import EmptySetError, NotReachedError, PreconditionViolatedError, UsageError
from verify.lemmas import (
    DRIFT_UPPER,
    check_circle_expansion,
    check_composition_oracle,
    check_disc_inclusion,
    check_g_equicontinuity,
    check_g_uniform_convergence,
    check_halfplane_drift,
    check_halfplane_inclusion,
    check_monotone_increasing_on_discs,
    check_ordering_sequences,
    check_phi_approximates_qn,
    disc_inclusion_margins,
    halfplane_drift_margins,
    phi_approximation_report,
    phi_deviation,
)
from verify.regions import CircleSpec, DiscSpec, HalfPlaneSpec, trap_radius
from verify.report import VerificationReport
from verify.sampling import circle_points, disc_points, halfplane_points
from verify.verifier import LemmaVerifier, ordering_start


class TestRegions:
    """Tests for discs, half-planes and circles."""

    def test_trap_tangent_at_origin(self):
        disc = DiscSpec.trap(5)
        assert disc.center == complex(trap_radius(5), 0)
        assert disc.real_interval == (0.0, 2 * trap_radius(5))

    def test_strict_membership(self):
        disc = DiscSpec.trap(5)
        assert not disc.contains(0.0)
        assert disc.contains(disc.center)

    def test_circle_translation(self):
        circle = CircleSpec.for_index(4, translate=3)
        assert circle.center.real == pytest.approx(6 * math.pi, rel=1e-15)
        assert circle.encloses(circle.center + 0.4 / math.pi)

    def test_index_validation(self):
        with pytest.raises(PreconditionViolatedError):
            DiscSpec.trap(0)
        with pytest.raises(PreconditionViolatedError):
            HalfPlaneSpec(-1.0)


class TestSampling:
    """Tests for the deterministic sample grids."""

    def test_circle_avoids_axis(self):
        """Half-step offsets keep samples off the real axis for even counts."""
        points = circle_points(0j, 1.0, 64)
        assert np.all(np.abs(points.imag) > 0)
        assert np.allclose(np.abs(points), 1.0)

    def test_halfplane_inside(self):
        points = halfplane_points(3 * math.pi, 400)
        assert np.all(points.real > 3 * math.pi)
        assert np.any(points.imag == 0)

    def test_disc_includes_boundary_and_center(self):
        points = disc_points(0.5, 400)
        assert np.max(np.abs(points)) == pytest.approx(0.5, rel=1e-15)
        assert np.min(np.abs(points)) == 0

    def test_halfplane_abscissa_validated(self):
        with pytest.raises(PreconditionViolatedError):
            halfplane_points(0.0, 400)


class TestVerificationReport:
    """Tests for report construction and serialization."""

    def test_worst_sample_selected(self):
        points = np.array([1 + 0j, 2 + 0j, 3 + 0j])
        report = VerificationReport.from_margins("demo", "x", points, np.array([0.5, 0.1, 0.3]))
        assert report.worst_margin == 0.1
        assert report.witness == 2 + 0j
        assert report.passed

    def test_nan_margin_fails(self):
        """A NaN margin is the worst margin and fails the check."""
        points = np.array([1 + 0j, 2 + 0j])
        report = VerificationReport.from_margins("demo", "x", points, np.array([0.5, np.nan]))
        assert report.witness == 2 + 0j
        assert not report.passed

    def test_ties_resolve_to_first_sample(self):
        points = np.array([1 + 0j, 2 + 0j, 3 + 0j])
        report = VerificationReport.from_margins("demo", "x", points, np.array([0.2, 0.1, 0.1]))
        assert report.witness == 2 + 0j

    def test_zero_margin_fails(self):
        report = VerificationReport.from_margins("demo", "x", np.array([0j]), np.array([0.0]))
        assert not report.passed

    def test_index_arrays_merged(self):
        """Per-sample indices at the witness land in the report's indices."""
        report = VerificationReport.from_margins(
            "demo", "x", np.array([0j, 1j]), np.array([1.0, -1.0]),
            indices={"n": 3}, index_arrays={"m": np.array([10, 11])},
        )
        assert report.indices == {"n": 3, "m": 11}

    def test_empty_rejected(self):
        with pytest.raises(EmptySetError):
            VerificationReport.from_margins("demo", "x", np.array([]), np.array([]))

    def test_to_line(self):
        report = VerificationReport("demo", "n=5", 4, 0.25, 1.5 - 2j, {"n": 5})
        assert report.to_line() == "demo  pass  2.500000000e-01  1.5  -2.0  n=5"

    def test_relative_margin(self):
        report = VerificationReport("demo", "", 1, 0.5, 0j, scale=2.0)
        assert report.relative_margin == 0.25


class TestHalfPlaneChecks:
    """Tests for the drift of w_n on half-planes."""

    @pytest.mark.parametrize("n", [1, 5, 20])
    def test_drift_holds(self, n):
        report = check_halfplane_drift(n, samples=1000)
        assert report.passed
        assert report.details["lower_margin"] > 0

    def test_witness_reevaluates(self):
        """The reported witness reproduces the worst margin."""
        report = check_halfplane_drift(5, samples=1000)
        margin = halfplane_drift_margins(5, np.array([report.witness]), DRIFT_UPPER)[0]
        assert margin == pytest.approx(report.worst_margin, rel=1e-9)

    def test_tighter_upper_constant_fails_near_boundary(self):
        """Near Re t = 3nπ the drift exceeds (11/8)·nπ."""
        report = check_halfplane_drift(1, samples=1000)
        assert report.details["stated_upper_margin"] < 0
        assert report.details["max_offset"] > 11 / 8

    @pytest.mark.parametrize("n", [5, 12])
    def test_inclusion_holds(self, n):
        assert check_halfplane_inclusion(n, samples=1000).passed

    def test_inclusion_index_validated(self):
        with pytest.raises(PreconditionViolatedError):
            check_halfplane_inclusion(4)

    def test_sample_floor(self):
        with pytest.raises(PreconditionViolatedError):
            check_halfplane_drift(3, samples=50)


class TestDiscChecks:
    """Tests for disc inclusion and circle expansion."""

    @pytest.mark.parametrize("n", [5, 50])
    def test_disc_inclusion_holds(self, n):
        report = check_disc_inclusion(n, 1024)
        assert report.passed
        assert report.details["in_range"]

    def test_witness_reevaluates(self):
        report = check_disc_inclusion(5, 1024)
        margin = disc_inclusion_margins(5, np.array([report.details["local_witness"]]))[0]
        assert margin == pytest.approx(report.worst_margin, rel=1e-9)

    def test_more_samples_still_pass(self):
        assert check_disc_inclusion(8, 2048).passed

    def test_relative_margin_grows_with_n(self):
        assert check_disc_inclusion(50, 1024).relative_margin > check_disc_inclusion(5, 1024).relative_margin

    @pytest.mark.parametrize("m,n", [(1, 0), (1, 10), (5, 3), (20, 20)])
    def test_circle_expansion_holds(self, m, n):
        assert check_circle_expansion(m, n, samples=512).passed

    def test_circle_expansion_sample_floor(self):
        with pytest.raises(PreconditionViolatedError):
            check_circle_expansion(1, 1, samples=10)


class TestScaledMaps:
    """Tests for g_m → q and φ_{m,n} → qⁿ."""

    def test_uniform_convergence(self):
        """|g_m − q| ≤ μ/m on the unit disc for m up to 50."""
        report = check_g_uniform_convergence(1.0, 50, 2000)
        assert report.passed
        assert report.details["mu"] > 0
        assert 1 <= report.indices["m"] <= 50

    def test_equicontinuity(self):
        report = check_g_equicontinuity(1.0, 0.5, samples=500)
        assert report.passed
        assert report.details["delta"] == pytest.approx(0.5 / (3 * (1 + 2 * math.pi)))
        assert report.indices["m"] >= report.details["M"]

    def test_phi_threshold_for_zero_iterates(self):
        """φ_{m,0} is the identity, so m = 1 already qualifies."""
        assert check_phi_approximates_qn(0, 0.5, 0.05, samples=200) == 1

    def test_phi_report_reverified_at_double(self):
        report = phi_approximation_report(1, 0.5, 0.05, samples=400)
        assert report.passed
        assert report.indices["m"] == 2 * report.indices["M"]

    def test_phi_three_iterates_at_defaults(self):
        """n = 3 needs M beyond ten thousand; the search still finds the least one."""
        z = disc_points(0.5, 2000)
        big_m = check_phi_approximates_qn(3, 0.5, 0.05)
        assert big_m > 10_000
        assert phi_deviation(big_m, 3, z) < 0.05
        assert phi_deviation(big_m - 1, 3, z) >= 0.05
        assert phi_approximation_report(3).passed

    def test_phi_unreachable_limit(self):
        with pytest.raises(NotReachedError):
            check_phi_approximates_qn(3, 0.5, 0.05, samples=200, m_limit=100)

    def test_phi_index_validated(self):
        with pytest.raises(PreconditionViolatedError):
            check_phi_approximates_qn(13, 0.5, 0.05)


class TestOrbitChecks:
    """Tests for the composition oracle and the real-orbit orderings."""

    def test_composition_oracle(self):
        report = check_composition_oracle(samples=200, seed=1)
        assert report.passed

    def test_ordering_sequences(self):
        report = check_ordering_sequences(5, ordering_start(5), 50)
        assert report.passed
        assert report.details["identity_error"] == 0

    def test_ordering_start_value(self):
        assert ordering_start(5) == pytest.approx(10 * math.pi + 1 / (60 * math.pi), rel=1e-15)

    @pytest.mark.parametrize("m", [5, 100])
    def test_monotone_on_discs(self, m):
        assert check_monotone_increasing_on_discs(m, samples=200).passed


class TestLemmaVerifier:
    """Tests for the named-check registry."""

    def test_names(self):
        verifier = LemmaVerifier()
        assert "disc-inclusion" in verifier.names
        assert len(verifier.names) == 10

    def test_unknown_name(self):
        with pytest.raises(UsageError):
            LemmaVerifier().run("no-such-check")

    def test_numbered_id(self):
        """Numbered ids resolve to the descriptive check names."""
        reports = LemmaVerifier(samples=100).run("7.2")
        assert reports
        assert {r.lemma_id for r in reports} == {"monotone"}

    def test_index_sweep(self):
        """An explicit index list replaces the default sweep."""
        reports = LemmaVerifier(samples=500).run("halfplane-inclusion", [5, 6])
        assert [r.indices["n"] for r in reports] == [5, 6]
        assert all(r.passed for r in reports)
