"""Verification module: sampled inequality checks with worst-case margin reports."""

from .lemmas import (
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
    g_deviation_profile,
    phi_approximation_report,
)
from .regions import CircleSpec, DiscSpec, HalfPlaneSpec
from .report import VerificationReport
from .verifier import LemmaVerifier

__all__ = [
    "check_circle_expansion",
    "check_composition_oracle",
    "check_disc_inclusion",
    "check_g_equicontinuity",
    "check_g_uniform_convergence",
    "check_halfplane_drift",
    "check_halfplane_inclusion",
    "check_monotone_increasing_on_discs",
    "check_ordering_sequences",
    "check_phi_approximates_qn",
    "g_deviation_profile",
    "phi_approximation_report",
    "CircleSpec",
    "DiscSpec",
    "HalfPlaneSpec",
    "VerificationReport",
    "LemmaVerifier",
]
