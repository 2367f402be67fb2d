"""
Basin Classifier - Trap/escape classification of pixels for q, f and the λ-family.

Every classifier runs a vectorized kernel over an array of points in its own
local coordinates. Pixels leave the active set once decided, so each step only
iterates the still-undecided orbits.
"""

import logging
import math
from abc import ABC, abstractmethod
from typing import Tuple

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from dynamics.maps import (
    MIN_TRAP_INDEX,
    TWO_PI,
    FamilyParam,
    compose_psi,
    h_lambda_local,
    h_local,
    q_lambda_local,
    q_local,
)
from errors import EmptySetError, PreconditionViolatedError
from workers import map_chunks

from .grid import ClassifiedGrid, GridSpec, PixelVerdict, PointSet, Verdict

logger = logging.getLogger(__name__)

# Trap disc D(1/(6π), 1/(6π)) of the cauliflower and the enclosing circle |z| = 2/π
CAULIFLOWER_TRAP = 1.0 / (6.0 * math.pi)
CAULIFLOWER_ESCAPE = 2.0 / math.pi

# |Im w| beyond which a plane orbit is taken to be escaping
PLANE_ESCAPE_IMAG = 40.0

KernelResult = Tuple[np.ndarray, np.ndarray]


class PixelClassifier(ABC):
    """A pointwise trap/escape test run on arrays of local coordinates."""

    #: Subtracted from absolute points before the kernel runs
    origin: complex = 0j
    max_iter: int = 1

    @property
    @abstractmethod
    def map_id(self) -> str:
        """Description of the iterated map, recorded with classified grids."""

    @abstractmethod
    def classify_local(self, zeta: np.ndarray) -> KernelResult:
        """Return (verdicts as int8, decided_at as int32) for local points."""

    def classify_point(self, z: complex) -> PixelVerdict:
        verdicts, decided = self.classify_local(np.array([complex(z) - self.origin]))
        return PixelVerdict(Verdict(int(verdicts[0])), int(decided[0]))

    def classify_stacked(self, zeta: np.ndarray) -> np.ndarray:
        verdicts, decided = self.classify_local(zeta)
        return np.stack([verdicts.astype(np.int32), decided], axis=1)


def _run_kernel(zeta: np.ndarray, max_iter: int, step) -> KernelResult:
    """
    Drive a trap/escape kernel with active-set compression.

    step(k, w, more) returns (inside, outside, advance) for the active orbits w
    at iteration k; `more` is False on the last iteration. advance maps the
    orbits that are neither to iteration k + 1.
    """
    zeta = np.asarray(zeta, dtype=complex).ravel()
    verdicts = np.full(zeta.shape, int(Verdict.UNDECIDED), dtype=np.int8)
    decided = np.full(zeta.shape, max_iter, dtype=np.int32)
    active = np.arange(zeta.size)
    w = zeta.copy()

    for k in range(max_iter + 1):
        if active.size == 0:
            break
        inside, outside, advance = step(k, w, k < max_iter)
        outside = outside & ~inside
        verdicts[active[inside]] = Verdict.INSIDE
        verdicts[active[outside]] = Verdict.OUTSIDE
        decided[active[inside | outside]] = k
        keep = ~(inside | outside)
        active = active[keep]
        w = w[keep]
        if k < max_iter:
            w = advance(w)
    return verdicts, decided


class CauliflowerClassifier(PixelClassifier):
    """Inside on entering D(1/(6π), 1/(6π)); Outside once |qᵏ(z)| > 2/π."""

    def __init__(self, max_iter: int = 5000):
        if max_iter < 1:
            raise PreconditionViolatedError(f"max_iter must be >= 1, got {max_iter}")
        self.max_iter = max_iter

    @property
    def map_id(self) -> str:
        return "q"

    def classify_local(self, zeta: np.ndarray) -> KernelResult:
        def step(k, w, more):
            inside = np.abs(w - CAULIFLOWER_TRAP) < CAULIFLOWER_TRAP
            outside = np.abs(w) > CAULIFLOWER_ESCAPE
            return inside, outside, q_local

        return _run_kernel(zeta, self.max_iter, step)


class WanderingClassifier(PixelClassifier):
    """
    Sound classifier for U_n, n ≥ 5.

    At step k (index j = n + k, local ζ = fᵏ(z) − 2jπ): Inside if ζ ∈ D_j,
    Outside if |ζ| > 2/(jπ), since U_j lies within T^j(C_j).
    """

    def __init__(self, n: int, max_steps: int = 1000):
        if n < MIN_TRAP_INDEX:
            raise PreconditionViolatedError(f"sound classification needs n >= {MIN_TRAP_INDEX}, got {n}")
        if max_steps < 1:
            raise PreconditionViolatedError(f"max_steps must be >= 1, got {max_steps}")
        self.n = n
        self.max_iter = max_steps
        self.origin = complex(n * TWO_PI, 0.0)

    @property
    def map_id(self) -> str:
        return f"f at n={self.n}"

    def classify_local(self, zeta: np.ndarray) -> KernelResult:
        def step(k, w, more):
            j = self.n + k
            trap = 1.0 / (6.0 * j * math.pi)
            inside = np.abs(w - trap) < trap
            outside = np.abs(w) > 2.0 / (j * math.pi)
            return inside, outside, lambda v: h_local(j, v)

        return _run_kernel(zeta, self.max_iter, step)


class OrbitWindowClassifier(PixelClassifier):
    """
    Best-effort plane classifier in absolute coordinates.

    Inside when the orbit enters some D▷_j with j ≥ min_index; Outside when it
    becomes non-finite or |Im| exceeds 40; Undecided otherwise. There is no
    Outside certificate here, so the picture is not sound.
    """

    def __init__(self, max_steps: int = 1000, min_index: int = MIN_TRAP_INDEX):
        self.max_iter = max_steps
        self.min_index = min_index

    @property
    def map_id(self) -> str:
        return f"f plane window, traps from j={self.min_index}"

    def classify_local(self, zeta: np.ndarray) -> KernelResult:
        def advance(w):
            with np.errstate(over="ignore", invalid="ignore"):
                return w * np.cos(w) + TWO_PI

        def step(k, w, more):
            with np.errstate(over="ignore", invalid="ignore"):
                finite = np.isfinite(w)
                j = np.floor(np.where(finite, w.real, 0.0) / TWO_PI)
                trap = 1.0 / (6.0 * np.maximum(j, 1.0) * math.pi)
                inside = finite & (j >= self.min_index) & (np.abs(w - (j * TWO_PI + trap)) < trap)
                outside = ~finite | (np.abs(w.imag) > PLANE_ESCAPE_IMAG)
            return inside, outside, advance

        return _run_kernel(zeta, self.max_iter, step)


class LambdaHeuristicClassifier(PixelClassifier):
    """
    Bounded-orbit heuristic for f_λ near 2nπ.

    Outside at the first step with |ζ_k| > radius (ζ_k = f_λᵏ(z) − 2(n+k)π);
    otherwise tentatively Inside after max_iter steps. For λ = 0 its Inside
    set contains the sound classifier's.
    """

    def __init__(self, n: int, param: FamilyParam, max_iter: int = 1000, radius: float = 1.0):
        if n < 1:
            raise PreconditionViolatedError(f"n must be >= 1, got {n}")
        self.n = n
        self.param = param
        self.max_iter = max_iter
        self.radius = radius
        self.origin = complex(n * TWO_PI, 0.0)

    @property
    def map_id(self) -> str:
        return f"f_lambda lambda={self.param.lam} at n={self.n} (HEURISTIC)"

    def classify_local(self, zeta: np.ndarray) -> KernelResult:
        lam = self.param.lam

        def step(k, w, more):
            with np.errstate(over="ignore", invalid="ignore"):
                outside = ~(np.abs(w) <= self.radius)
            inside = np.zeros(w.shape, dtype=bool) if more else ~outside
            return inside, outside, lambda v: h_lambda_local(self.n + k, v, lam)

        return _run_kernel(zeta, self.max_iter, step)


class QuadraticHeuristicClassifier(PixelClassifier):
    """Filled bounded-orbit set of q_λ with escape radius (1 + |1+λ|)/π."""

    def __init__(self, param: FamilyParam, max_iter: int = 1000):
        self.param = param
        self.max_iter = max_iter

    @property
    def escape_radius(self) -> float:
        return (1.0 + abs(self.param.linear_coefficient)) / math.pi

    @property
    def map_id(self) -> str:
        return f"q_lambda lambda={self.param.lam}"

    def classify_local(self, zeta: np.ndarray) -> KernelResult:
        coefficient = self.param.linear_coefficient
        radius = self.escape_radius

        def step(k, w, more):
            outside = ~(np.abs(w) <= radius)
            inside = np.zeros(w.shape, dtype=bool) if more else ~outside
            return inside, outside, lambda v: q_lambda_local(v, coefficient)

        return _run_kernel(zeta, self.max_iter, step)


class GridClassifier:
    """Applies a PixelClassifier to every pixel center of a grid, in parallel row chunks."""

    def __init__(self, workers=None):
        """
        Initialize the grid classifier.

        Args:
            workers: Thread cap; None uses Settings.worker_count
        """
        self.workers = workers

    def classify(self, spec: GridSpec, classifier: PixelClassifier) -> ClassifiedGrid:
        """Classify every pixel; the verdict matrix is independent of the worker count."""
        zeta = spec.local_centers(classifier.origin).ravel()
        stacked = map_chunks(classifier.classify_stacked, zeta, self.workers)
        verdicts = stacked[:, 0].astype(np.int8).reshape(spec.ny, spec.nx)
        decided = stacked[:, 1].astype(np.int32).reshape(spec.ny, spec.nx)
        grid = ClassifiedGrid(spec=spec, verdicts=verdicts, decided_at=decided, map_id=classifier.map_id)
        logger.info(
            f"Classified {spec.nx}x{spec.ny} grid for {classifier.map_id}: {grid.counts()}"
        )
        return grid


def classify_cauliflower(z: complex, max_iter: int = 5000) -> PixelVerdict:
    """Classify one point for the cauliflower of q(z) = z − πz²."""
    return CauliflowerClassifier(max_iter).classify_point(z)


def classify_wandering(z: complex, n: int, max_steps: int = 1000) -> PixelVerdict:
    """Classify one point (absolute coordinates) for the wandering component U_n."""
    return WanderingClassifier(n, max_steps).classify_point(z)


def classify_grid(spec: GridSpec, classifier: PixelClassifier, workers=None) -> ClassifiedGrid:
    return GridClassifier(workers).classify(spec, classifier)


def extract_inside_points(grid: ClassifiedGrid) -> PointSet:
    """
    Pixel centers with verdict Inside.

    Raises:
        EmptySetError: If no pixel is Inside
    """
    points = grid.spec.centers()[grid.inside_mask]
    if points.size == 0:
        raise EmptySetError(f"no Inside pixels for {grid.map_id}")
    spec = grid.spec
    provenance = (
        f"{grid.map_id}; grid center={spec.center} half={spec.half_width}x{spec.half_height} "
        f"res={spec.nx}x{spec.ny}"
    )
    return PointSet(points, provenance)


def rescale_component(points: PointSet, n: int) -> PointSet:
    """Map each p to n·(p − 2nπ), taking U_n to V_n."""
    return PointSet(n * (points.points - n * TWO_PI), f"{points.provenance}; rescaled by n={n}")


def component_diameter(points: PointSet) -> float:
    """Largest pairwise distance, searched over convex hull vertices."""
    if points.is_empty:
        raise EmptySetError("diameter of an empty point set")
    pts = points.points
    candidates = pts
    if len(pts) >= 3:
        try:
            hull = ConvexHull(np.column_stack([pts.real, pts.imag]))
            candidates = pts[hull.vertices]
        except QhullError:
            # Collinear sets: the diameter is spanned by the two extremes along the line
            order = np.lexsort((pts.imag, pts.real))
            candidates = pts[[order[0], order[-1]]]
    return float(np.max(np.abs(candidates[:, None] - candidates[None, :])))


def reverify_inside(zeta: complex, n: int, decided_at: int) -> bool:
    """Recompute ψ_{n,k}(ζ) for local ζ = z − 2nπ and confirm it lies in D_{n+k}, k = decided_at."""
    j = n + decided_at
    zeta = compose_psi(n, decided_at, complex(zeta))
    trap = 1.0 / (6.0 * j * math.pi)
    return bool(abs(zeta - trap) < trap)
