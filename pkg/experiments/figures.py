"""
Figures - Picture drivers: the cauliflower, the plane window of wandering components, single components.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from basin.classify import (
    CauliflowerClassifier,
    GridClassifier,
    OrbitWindowClassifier,
    WanderingClassifier,
    component_diameter,
    extract_inside_points,
)
from basin.grid import ClassifiedGrid, GridSpec
from basin.render import side_by_side
from config import get_settings
from dynamics.maps import MIN_TRAP_INDEX, TWO_PI
from errors import PreconditionViolatedError

from .convergence import containment_radius, reverify_component

logger = logging.getLogger(__name__)

# Default plane window: U_4 .. U_8 around Re z = 12π
WINDOW_CENTER = complex(6 * TWO_PI, 0.0)
WINDOW_HALF_WIDTH = 4.0 * math.pi
WINDOW_HALF_HEIGHT = 2.0
WINDOW_NX = 800
WINDOW_NY = 400

# Component whose zoom is shown next to the plane window
INSET_INDEX = 2


@dataclass
class OrbitWindowResult:
    """Best-effort plane picture, optionally with a zoom on U_2."""

    grid: ClassifiedGrid
    inset: Optional[ClassifiedGrid] = None

    @property
    def verdicts(self) -> np.ndarray:
        if self.inset is None:
            return self.grid.verdicts
        return side_by_side(self.grid.verdicts, self.inset.verdicts)


def run_orbit_window(
    center: complex = WINDOW_CENTER,
    half_width: float = WINDOW_HALF_WIDTH,
    half_height: float = WINDOW_HALF_HEIGHT,
    nx: int = WINDOW_NX,
    ny: int = WINDOW_NY,
    max_steps: Optional[int] = None,
    min_index: int = MIN_TRAP_INDEX,
    inset_resolution: int = 0,
    workers: Optional[int] = None,
) -> OrbitWindowResult:
    """
    Classify a window of the plane covering several wandering components.

    Pixels are Inside once their orbit enters a trap disc D▷_j with
    j ≥ min_index. Components U_n with n < 5 only show up through that forward
    orbit test, so the picture is best-effort.

    Args:
        center: Window center (absolute coordinates)
        half_width: Half of the window width
        half_height: Half of the window height
        nx: Pixel columns
        ny: Pixel rows
        max_steps: Iteration budget; None uses Settings.wandering_max_steps
        min_index: First trap index counted as Inside
        inset_resolution: Side of the square zoom on U_2; 0 disables the zoom
        workers: Thread cap

    Returns:
        OrbitWindowResult with the window grid and the optional inset grid
    """
    max_steps = max_steps if max_steps is not None else get_settings().wandering_max_steps
    classifier = OrbitWindowClassifier(max_steps, min_index)
    pool = GridClassifier(workers)
    grid = pool.classify(GridSpec(complex(center), half_width, half_height, nx, ny), classifier)

    inset = None
    if inset_resolution:
        inset = pool.classify(GridSpec.for_component(INSET_INDEX, inset_resolution), classifier)
        logger.warning(f"U_{INSET_INDEX} zoom is best-effort: no Outside certificate below n={MIN_TRAP_INDEX}")
    return OrbitWindowResult(grid=grid, inset=inset)


def render_cauliflower(
    resolution: int,
    max_iter: Optional[int] = None,
    workers: Optional[int] = None,
) -> ClassifiedGrid:
    """Classify [−2/π, 2/π]² for q(z) = z − πz²."""
    max_iter = max_iter if max_iter is not None else get_settings().cauliflower_max_iter
    return GridClassifier(workers).classify(GridSpec.for_cauliflower(resolution), CauliflowerClassifier(max_iter))


@dataclass
class ComponentEstimate:
    """One classified U_n with its measurements; bound is 4/(nπ), stated_bound 2/(nπ)."""

    n: int
    grid: ClassifiedGrid
    inside_count: int
    diameter: float
    bound: float
    stated_bound: float
    reverified: int

    @property
    def undecided_fraction(self) -> float:
        return self.grid.undecided_fraction

    @property
    def within_bound(self) -> bool:
        return self.diameter <= self.bound + self.grid.spec.pixel_diagonal

    @property
    def stated_margin(self) -> float:
        return self.stated_bound + self.grid.spec.pixel_diagonal - self.diameter

    def summary(self) -> dict:
        return {
            "n": self.n,
            "inside": self.inside_count,
            "undecided_fraction": self.undecided_fraction,
            "diameter": self.diameter,
            "bound": self.bound,
            "stated_bound": self.stated_bound,
            "stated_margin": self.stated_margin,
            "pixel_diagonal": self.grid.spec.pixel_diagonal,
            "reverified": self.reverified,
        }


def estimate_component(
    n: int,
    resolution: int,
    max_steps: Optional[int] = None,
    workers: Optional[int] = None,
) -> ComponentEstimate:
    """
    Classify U_n on its default window and measure it.

    Raises:
        PreconditionViolatedError: If n < 5, where no sound Outside test exists
        EmptySetError: If no pixel is Inside
        InvariantViolationError: If an Inside pixel fails re-verification
    """
    if n < MIN_TRAP_INDEX:
        raise PreconditionViolatedError(f"sound component estimates need n >= {MIN_TRAP_INDEX}, got {n}")
    max_steps = max_steps if max_steps is not None else get_settings().wandering_max_steps
    grid = GridClassifier(workers).classify(GridSpec.for_component(n, resolution), WanderingClassifier(n, max_steps))
    reverified = reverify_component(grid, n)
    points = extract_inside_points(grid)
    estimate = ComponentEstimate(
        n=n,
        grid=grid,
        inside_count=len(points),
        diameter=component_diameter(points),
        bound=2.0 * containment_radius(n),
        stated_bound=containment_radius(n),
        reverified=reverified,
    )
    logger.info(f"U_{n}: {estimate.inside_count} Inside pixels, diameter {estimate.diameter:.6e}")
    return estimate
