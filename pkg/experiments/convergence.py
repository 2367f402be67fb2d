"""
Convergence Experiments - Hausdorff convergence of V̄_n to the cauliflower and the diameter bound of U_n.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from basin.classify import (
    CauliflowerClassifier,
    GridClassifier,
    WanderingClassifier,
    component_diameter,
    extract_inside_points,
    rescale_component,
    reverify_inside,
)
from basin.grid import ClassifiedGrid, GridSpec, PointSet
from config import get_settings
from dynamics.maps import MIN_TRAP_INDEX, TWO_PI
from errors import InvariantViolationError, PreconditionViolatedError
from metrics.hausdorff import hausdorff_distance

logger = logging.getLogger(__name__)

MAX_COMPONENT_INDEX = 500

# Inside pixels re-verified per classified component
REVERIFY_SAMPLES = 100

CSV_HEADER = "n,d_H,undecided_fraction,pixel_size"


@dataclass(frozen=True)
class ConvergenceRow:
    """d_H(V_n, W̄₀) at one index, with the method-error scales of the measurement."""

    n: int
    d_H: float
    undecided_fraction: float
    pixel_size: float

    def to_csv(self) -> str:
        return f"{self.n},{self.d_H!r},{self.undecided_fraction!r},{self.pixel_size!r}"


@dataclass
class ConvergenceReport:
    """Rows of the convergence table plus the observed trends."""

    rows: List[ConvergenceRow]
    cauliflower_undecided_fraction: float
    max_rescaled_modulus: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def strictly_decreasing(self) -> bool:
        values = [row.d_H for row in self.rows]
        return all(b < a for a, b in zip(values, values[1:]))

    @property
    def halved(self) -> bool:
        """d_H at the largest index is below half of d_H at the smallest."""
        return self.rows[-1].d_H < 0.5 * self.rows[0].d_H

    def to_csv(self) -> str:
        return "\n".join([CSV_HEADER] + [row.to_csv() for row in self.rows]) + "\n"


def _check_indices(n_list: Sequence[int]) -> List[int]:
    indices = list(n_list)
    if not indices:
        raise PreconditionViolatedError("index list is empty")
    for n in indices:
        if not MIN_TRAP_INDEX <= n <= MAX_COMPONENT_INDEX:
            raise PreconditionViolatedError(
                f"component index {n} outside [{MIN_TRAP_INDEX}, {MAX_COMPONENT_INDEX}]"
            )
    return indices


def discretize_cauliflower(
    resolution: int,
    max_iter: Optional[int] = None,
    workers: Optional[int] = None,
) -> Tuple[ClassifiedGrid, PointSet]:
    """Classify [−2/π, 2/π]² for q and return the grid with its Inside centers."""
    max_iter = max_iter if max_iter is not None else get_settings().cauliflower_max_iter
    grid = GridClassifier(workers).classify(
        GridSpec.for_cauliflower(resolution), CauliflowerClassifier(max_iter)
    )
    return grid, extract_inside_points(grid)


def reverify_component(grid: ClassifiedGrid, n: int, samples: int = REVERIFY_SAMPLES) -> int:
    """
    Re-check that evenly spaced Inside pixels enter D▷_{n+k} at their recorded step.

    Returns:
        The number of pixels re-verified

    Raises:
        InvariantViolationError: If any selected pixel fails the re-check
    """
    rows, cols = np.nonzero(grid.inside_mask)
    if rows.size == 0:
        return 0
    picks = np.unique(np.linspace(0, rows.size - 1, min(samples, rows.size)).astype(int))
    centers = grid.spec.local_centers(complex(n * TWO_PI, 0.0))
    for k in picks:
        r, c = rows[k], cols[k]
        if not reverify_inside(centers[r, c], n, int(grid.decided_at[r, c])):
            raise InvariantViolationError(f"Inside pixel at local {centers[r, c]!r}, n={n}, failed re-verification")
    return int(picks.size)


def discretize_component(
    n: int,
    resolution: int,
    max_steps: Optional[int] = None,
    workers: Optional[int] = None,
) -> Tuple[ClassifiedGrid, PointSet]:
    """Classify the default window around U_n and return the grid with its Inside centers."""
    max_steps = max_steps if max_steps is not None else get_settings().wandering_max_steps
    grid = GridClassifier(workers).classify(
        GridSpec.for_component(n, resolution), WanderingClassifier(n, max_steps)
    )
    reverify_component(grid, n)
    return grid, extract_inside_points(grid)


def run_hausdorff_convergence(
    n_list: Sequence[int],
    resolution: int,
    cauliflower_max_iter: Optional[int] = None,
    wandering_max_steps: Optional[int] = None,
    method: str = "bucketed",
    workers: Optional[int] = None,
) -> ConvergenceReport:
    """
    Measure d_H(V_n, W̄₀) for each n.

    W̄₀ is discretized once; each U_n is classified on its own window, rescaled
    by v = n(p − 2nπ) and compared. Undecided pixels are excluded from both
    sets and their share is reported.

    Raises:
        EmptySetError: If a discretization has no Inside pixels
    """
    indices = _check_indices(n_list)
    cauliflower_grid, cauliflower = discretize_cauliflower(resolution, cauliflower_max_iter, workers)
    logger.info(
        f"Cauliflower: {len(cauliflower)} Inside pixels, "
        f"{cauliflower_grid.undecided_fraction:.4f} undecided"
    )

    rows = []
    max_modulus = 0.0
    for n in indices:
        grid, component = discretize_component(n, resolution, wandering_max_steps, workers)
        rescaled = rescale_component(component, n)
        max_modulus = max(max_modulus, rescaled.max_modulus())
        result = hausdorff_distance(rescaled, cauliflower, method, workers)
        row = ConvergenceRow(
            n=n,
            d_H=result.distance,
            undecided_fraction=grid.undecided_fraction,
            pixel_size=n * grid.spec.pixel_diagonal,
        )
        logger.info(f"n={n}: d_H={row.d_H:.6f} undecided={row.undecided_fraction:.4f}")
        rows.append(row)

    report = ConvergenceReport(
        rows=rows,
        cauliflower_undecided_fraction=cauliflower_grid.undecided_fraction,
        max_rescaled_modulus=max_modulus,
    )
    if not report.strictly_decreasing:
        logger.warning("d_H did not decrease strictly along the index list (empirical trend)")
    return report


def containment_radius(n: int) -> float:
    """Radius 2/(nπ) of the circle about 2nπ that contains U_n."""
    return 2.0 / (n * math.pi)


@dataclass(frozen=True)
class DiameterRow:
    """
    Measured diameter of the U_n discretization.

    The asserted bound is the containment circle's diameter 4/(nπ). The
    radius 2/(nπ) is tracked as the stated bound: the closed cauliflower has
    diameter about 0.71 > 2/π, so V_n exceeds it once the grid is fine enough.
    """

    n: int
    diameter: float
    bound: float
    stated_bound: float
    tolerance: float

    @property
    def rescaled_diameter(self) -> float:
        return self.n * self.diameter

    @property
    def passed(self) -> bool:
        return self.diameter <= self.bound + self.tolerance

    @property
    def stated_margin(self) -> float:
        return self.stated_bound + self.tolerance - self.diameter


@dataclass
class DiameterReport:
    rows: List[DiameterRow]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def shrinking(self) -> bool:
        return self.rows[-1].diameter < self.rows[0].diameter


def run_diameter_check(
    n_list: Sequence[int],
    resolution: int,
    max_steps: Optional[int] = None,
    workers: Optional[int] = None,
) -> DiameterReport:
    """Measure diam(U_n) over each discretization against 4/(nπ) and 2/(nπ), plus a pixel diagonal."""
    rows = []
    for n in _check_indices(n_list):
        grid, component = discretize_component(n, resolution, max_steps, workers)
        row = DiameterRow(
            n=n,
            diameter=component_diameter(component),
            bound=2.0 * containment_radius(n),
            stated_bound=containment_radius(n),
            tolerance=grid.spec.pixel_diagonal,
        )
        if not row.passed:
            logger.warning(f"diam(U_{n})={row.diameter:.6e} exceeds {row.bound + row.tolerance:.6e}")
        elif row.stated_margin < 0:
            logger.info(f"diam(U_{n})={row.diameter:.6e} is above the stated 2/(nπ) by {-row.stated_margin:.3e}")
        rows.append(row)
    return DiameterReport(rows)
