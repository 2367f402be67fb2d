"""
Grid Types - Pixel lattices, per-pixel verdicts and finite point sets.
"""

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Any, Dict

import numpy as np

from dynamics.maps import TWO_PI
from errors import PreconditionViolatedError


class Verdict(IntEnum):
    """Classification outcome of one pixel."""

    OUTSIDE = 0
    INSIDE = 1
    UNDECIDED = 2


@dataclass(frozen=True)
class PixelVerdict:
    """A verdict and the iteration at which it was reached."""

    verdict: Verdict
    decided_at: int


@dataclass(frozen=True)
class GridSpec:
    """
    Rectangular lattice whose sample points are the pixel centers.

    Row 0 is the top row (largest imaginary part). Pixel offsets are computed
    so that rows i and ny−1−i are exact mirror images about the center line.
    """

    center: complex
    half_width: float
    half_height: float
    nx: int
    ny: int

    def __post_init__(self):
        if self.nx < 2 or self.ny < 2:
            raise PreconditionViolatedError(f"grid needs nx, ny >= 2, got {self.nx}x{self.ny}")
        if not (self.half_width > 0 and self.half_height > 0):
            raise PreconditionViolatedError("grid half sizes must be positive")
        object.__setattr__(self, "center", complex(self.center))

    @classmethod
    def square(cls, center: complex, half: float, resolution: int) -> "GridSpec":
        return cls(complex(center), half, half, resolution, resolution)

    @classmethod
    def for_component(cls, n: int, resolution: int) -> "GridSpec":
        """Window around Tⁿ(C_n): center 2nπ + 1/(nπ), half-size 2.2/(nπ)."""
        if n < 1:
            raise PreconditionViolatedError(f"component grid needs n >= 1, got {n}")
        return cls.square(complex(n * TWO_PI + 1.0 / (n * math.pi), 0.0), 2.2 / (n * math.pi), resolution)

    @classmethod
    def for_cauliflower(cls, resolution: int) -> "GridSpec":
        """The square [−2/π, 2/π]²."""
        return cls.square(0j, 2.0 / math.pi, resolution)

    @property
    def pixel_width(self) -> float:
        return 2.0 * self.half_width / self.nx

    @property
    def pixel_height(self) -> float:
        return 2.0 * self.half_height / self.ny

    @property
    def pixel_diagonal(self) -> float:
        return math.hypot(self.pixel_width, self.pixel_height)

    @property
    def is_real_symmetric(self) -> bool:
        return self.center.imag == 0.0

    def x_offsets(self) -> np.ndarray:
        return self.half_width * (2.0 * np.arange(self.nx) + 1.0 - self.nx) / self.nx

    def y_offsets(self) -> np.ndarray:
        """Offsets from the center line, top row first."""
        return self.half_height * (self.ny - 1.0 - 2.0 * np.arange(self.ny)) / self.ny

    def local_centers(self, origin: complex = 0j) -> np.ndarray:
        """Pixel centers minus origin, shape (ny, nx)."""
        shift = self.center - origin
        xs = shift.real + self.x_offsets()
        ys = shift.imag + self.y_offsets()
        return xs[None, :] + 1j * ys[:, None]

    def centers(self) -> np.ndarray:
        return self.local_centers(0j)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "center": [self.center.real, self.center.imag],
            "half_width": self.half_width,
            "half_height": self.half_height,
            "nx": self.nx,
            "ny": self.ny,
        }


@dataclass
class ClassifiedGrid:
    """Verdict matrix over a GridSpec, with the iteration each pixel was decided at."""

    spec: GridSpec
    verdicts: np.ndarray
    decided_at: np.ndarray
    map_id: str

    def verdict_at(self, row: int, col: int) -> PixelVerdict:
        return PixelVerdict(Verdict(int(self.verdicts[row, col])), int(self.decided_at[row, col]))

    @property
    def inside_mask(self) -> np.ndarray:
        return self.verdicts == Verdict.INSIDE

    def counts(self) -> Dict[str, int]:
        return {v.name.lower(): int(np.count_nonzero(self.verdicts == v)) for v in Verdict}

    @property
    def undecided_fraction(self) -> float:
        return float(np.count_nonzero(self.verdicts == Verdict.UNDECIDED)) / self.verdicts.size

    def is_mirror_symmetric(self) -> bool:
        """Verdicts agree between each row and its reflection about the center line."""
        return bool(np.array_equal(self.verdicts, self.verdicts[::-1, :]))


@dataclass(frozen=True)
class PointSet:
    """A finite discretization of a compact planar set."""

    points: np.ndarray
    provenance: str

    def __post_init__(self):
        object.__setattr__(self, "points", np.asarray(self.points, dtype=complex).ravel())

    def __len__(self) -> int:
        return len(self.points)

    @property
    def is_empty(self) -> bool:
        return len(self.points) == 0

    def max_modulus(self) -> float:
        return float(np.max(np.abs(self.points))) if len(self.points) else 0.0
