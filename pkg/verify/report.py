"""
Verification Report - Worst-case margin of a sampled inequality and its witness.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional

import numpy as np

from errors import EmptySetError
from workers import map_chunks

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    """Pass/fail verdict of one check: passed iff worst_margin > 0."""

    lemma_id: str
    parameter_range: str
    samples: int
    worst_margin: float
    witness: complex
    indices: Dict[str, int] = field(default_factory=dict)
    scale: float = 1.0
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.worst_margin > 0)

    @property
    def relative_margin(self) -> float:
        """Margin in units of the check's natural length scale."""
        return self.worst_margin / self.scale

    @classmethod
    def from_margins(
        cls,
        lemma_id: str,
        parameter_range: str,
        points: np.ndarray,
        margins: np.ndarray,
        indices: Optional[Dict[str, int]] = None,
        scale: float = 1.0,
        details: Optional[Dict[str, Any]] = None,
        index_arrays: Optional[Dict[str, np.ndarray]] = None,
    ) -> "VerificationReport":
        """
        Build a report from per-sample margins.

        NaN margins count as failures. Ties resolve to the first sample.
        index_arrays carries per-sample indices (e.g. m, n of a sweep); their
        values at the witness are merged into the report's indices.
        """
        margins = np.ravel(np.asarray(margins, dtype=float))
        if margins.size == 0:
            raise EmptySetError(f"{lemma_id}: no samples to verify")
        ranked = np.where(np.isnan(margins), -np.inf, margins)
        worst = int(np.argmin(ranked))
        witness_indices = dict(indices or {})
        for name, values in (index_arrays or {}).items():
            witness_indices[name] = int(np.ravel(values)[worst])
        report = cls(
            lemma_id=lemma_id,
            parameter_range=parameter_range,
            samples=int(margins.size),
            worst_margin=float(margins[worst]),
            witness=complex(np.ravel(points)[worst]),
            indices=witness_indices,
            scale=scale,
            details=dict(details or {}),
        )
        logger.debug(f"{lemma_id} [{parameter_range}]: margin {report.worst_margin:.6e}")
        return report

    def to_line(self) -> str:
        """Serialize as `lemma_id  pass|fail  worst_margin  witness_re  witness_im  params…`."""
        verdict = "pass" if self.passed else "fail"
        params = " ".join(f"{k}={v}" for k, v in self.indices.items())
        return (
            f"{self.lemma_id}  {verdict}  {self.worst_margin:.9e}  "
            f"{self.witness.real!r}  {self.witness.imag!r}  {params}".rstrip()
        )


def sampled_margins(
    margin_fn: Callable[[np.ndarray], np.ndarray],
    points: np.ndarray,
    workers: Optional[int] = None,
) -> np.ndarray:
    """Evaluate a vectorized margin function over points, partitioned across workers."""
    return map_chunks(margin_fn, np.asarray(points), workers)
