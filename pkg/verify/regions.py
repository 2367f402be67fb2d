"""
Regions - The discs D_n and D▷_n, the half-planes H_a and the circles C_n.
"""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from dynamics.maps import TWO_PI, ComplexLike
from errors import PreconditionViolatedError

from .sampling import circle_points


def trap_radius(n: int) -> float:
    """Radius 1/(6nπ) shared by D_n and D▷_n."""
    return 1.0 / (6.0 * n * math.pi)


def circle_radius(n: int) -> float:
    """Radius 2/(nπ) of C_n."""
    return 2.0 / (n * math.pi)


@dataclass(frozen=True)
class DiscSpec:
    """Open disc with a center and a positive radius."""

    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise PreconditionViolatedError(f"disc radius must be positive, got {self.radius}")

    @classmethod
    def trap(cls, n: int) -> "DiscSpec":
        """D_n: center and radius 1/(6nπ), tangent to the imaginary axis at 0."""
        if n < 1:
            raise PreconditionViolatedError(f"D_n needs n >= 1, got {n}")
        r = trap_radius(n)
        return cls(complex(r, 0.0), r)

    def contains(self, z: ComplexLike):
        """Strict membership; vectorized over numpy input."""
        return np.abs(z - self.center) < self.radius

    def boundary(self, samples: int) -> np.ndarray:
        """Boundary points with half-step angular offsets."""
        return circle_points(self.center, self.radius, samples)

    @property
    def real_interval(self) -> Tuple[float, float]:
        """Open interval cut out of the real axis (centers are real)."""
        return (self.center.real - self.radius, self.center.real + self.radius)


@dataclass(frozen=True)
class HalfPlaneSpec:
    """H_a = {Re z > a}."""

    a: float

    def __post_init__(self):
        if self.a < 0:
            raise PreconditionViolatedError(f"half-plane abscissa must be >= 0, got {self.a}")

    @classmethod
    def for_index(cls, n: int) -> "HalfPlaneSpec":
        """H_{3nπ}, the reciprocal image of D_n."""
        return cls(3.0 * n * math.pi)

    def contains(self, z: ComplexLike):
        return np.real(z) > self.a


@dataclass(frozen=True)
class CircleSpec:
    """Circle of a given radius about the origin, translated by T^translate."""

    radius: float
    translate: int = 0

    def __post_init__(self):
        if not self.radius > 0:
            raise PreconditionViolatedError(f"circle radius must be positive, got {self.radius}")

    @classmethod
    def for_index(cls, n: int, translate: int = 0) -> "CircleSpec":
        """C_n (|z| = 2/(nπ)), optionally translated to T^k(C_n)."""
        if n < 1:
            raise PreconditionViolatedError(f"C_n needs n >= 1, got {n}")
        return cls(circle_radius(n), translate)

    @property
    def center(self) -> complex:
        return complex(self.translate * TWO_PI, 0.0)

    def points(self, samples: int) -> np.ndarray:
        return circle_points(self.center, self.radius, samples)

    def encloses(self, z: ComplexLike):
        """Closed-disc membership |z − 2kπ| ≤ radius."""
        return np.abs(z - self.center) <= self.radius
