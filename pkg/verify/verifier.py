"""
Lemma Verifier - Runs named checks over their default parameter sweeps.
"""

import logging
import math
from typing import Callable, Dict, List, Optional, Sequence

from errors import UsageError

from . import lemmas
from .report import VerificationReport

logger = logging.getLogger(__name__)

# Numbered ids accepted in place of the descriptive check names
NUMBERED_ALIASES: Dict[str, str] = {
    "3.2": "halfplane-drift",
    "3.4": "disc-inclusion",
    "3.6": "circle-expansion",
    "6.2": "g-convergence",
    "6.4": "phi-approximation",
    "7.2": "monotone",
    "7.3": "ordering",
}


def ordering_start(m: int) -> float:
    """Start y₀ = 2mπ + 1/(12mπ), halfway to the center of D▷_m (10π + 1/(60π) for m = 5)."""
    return 2.0 * m * math.pi + 1.0 / (12.0 * m * math.pi)


class LemmaVerifier:
    """Registry of the inequality checks, each with a default sweep."""

    def __init__(self, samples: Optional[int] = None, workers: Optional[int] = None):
        """
        Initialize the verifier.

        Args:
            samples: Override for the per-check sample count (None keeps each default)
            workers: Thread cap for margin evaluation
        """
        self.samples = samples
        self.workers = workers
        self._checks: Dict[str, Callable[[Optional[Sequence[int]]], List[VerificationReport]]] = {
            "halfplane-drift": self._halfplane_drift,
            "halfplane-inclusion": self._halfplane_inclusion,
            "disc-inclusion": self._disc_inclusion,
            "circle-expansion": self._circle_expansion,
            "g-convergence": self._g_convergence,
            "g-equicontinuity": self._g_equicontinuity,
            "phi-approximation": self._phi_approximation,
            "composition": self._composition,
            "ordering": self._ordering,
            "monotone": self._monotone,
        }

    @property
    def names(self) -> List[str]:
        return list(self._checks)

    def run(self, name: str, indices: Optional[Sequence[int]] = None) -> List[VerificationReport]:
        """
        Run one named check, or every check for name "all"; numbered ids are aliases.

        Args:
            name: Check name or "all"
            indices: Optional index sweep replacing the check's default

        Returns:
            One report per swept parameter set

        Raises:
            UsageError: If the name is unknown
        """
        name = NUMBERED_ALIASES.get(name, name)
        if name == "all":
            reports = []
            for check in self._checks:
                reports.extend(self.run(check, None))
            return reports

        if name not in self._checks:
            choices = ", ".join(self.names + list(NUMBERED_ALIASES))
            raise UsageError(f"unknown lemma '{name}'; choose from {choices} or all")

        logger.info(f"Verifying {name}")
        reports = self._checks[name](indices)
        failed = [r for r in reports if not r.passed]
        if failed:
            logger.warning(f"{name}: {len(failed)} of {len(reports)} runs failed")
        return reports

    def _samples(self, default: int) -> int:
        return self.samples if self.samples is not None else default

    def _halfplane_drift(self, indices):
        return [
            lemmas.check_halfplane_drift(n, self._samples(10_000), workers=self.workers)
            for n in indices or range(1, 21)
        ]

    def _halfplane_inclusion(self, indices):
        return [
            lemmas.check_halfplane_inclusion(n, self._samples(10_000), workers=self.workers)
            for n in indices or range(5, 21)
        ]

    def _disc_inclusion(self, indices):
        return [
            lemmas.check_disc_inclusion(n, self._samples(4096), workers=self.workers)
            for n in indices or range(5, 201)
        ]

    def _circle_expansion(self, indices):
        # The sweep runs over m; every m is paired with n = 0..20
        return [
            lemmas.check_circle_expansion(m, n, self._samples(4096), workers=self.workers)
            for m in indices or range(1, 21)
            for n in range(0, 21)
        ]

    def _g_convergence(self, indices):
        m_max = max(indices) if indices else 200
        return [lemmas.check_g_uniform_convergence(1.0, m_max, self._samples(10_000))]

    def _g_equicontinuity(self, indices):
        return [lemmas.check_g_equicontinuity(1.0, 0.5, samples=self._samples(2000))]

    def _phi_approximation(self, indices):
        return [
            lemmas.phi_approximation_report(n, 0.5, 0.05, self._samples(2000))
            for n in indices or (1, 2, 3)
        ]

    def _composition(self, indices):
        return [lemmas.check_composition_oracle(self._samples(1000), seed=0)]

    def _ordering(self, indices):
        return [lemmas.check_ordering_sequences(m, ordering_start(m), 50) for m in indices or (5,)]

    def _monotone(self, indices):
        return [lemmas.check_monotone_increasing_on_discs(m, self._samples(1000)) for m in indices or (5, 100)]
