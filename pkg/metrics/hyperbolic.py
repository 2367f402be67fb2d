"""
Hyperbolic Metric - Distances between real points of half-planes and discs.

The half-plane H_a carries the density 1/(Re z − a), so real points are at
distance |log((x₂ − a)/(x₁ − a))|. A disc with real center c and radius r is
sent onto H_{1/(2r)} by x ↦ 1/(x − (c − r)); disc distances are measured
there.
"""

import math
from dataclasses import dataclass
from typing import Callable, Tuple, Union

from errors import OutsideFrameError, PreconditionViolatedError
from verify.regions import DiscSpec


@dataclass(frozen=True)
class HalfPlaneFrame:
    """H_a = {Re z > a}."""

    a: float

    def contains(self, x: float) -> bool:
        return x > self.a

    def density(self, x: float) -> float:
        self._require(x)
        return 1.0 / (x - self.a)

    def _require(self, x: float) -> None:
        if not self.contains(x):
            raise OutsideFrameError(f"{x!r} is not inside H_{self.a}")

    def distance(self, x1: float, x2: float) -> float:
        self._require(x1)
        self._require(x2)
        return abs(math.log((x2 - self.a) / (x1 - self.a)))


@dataclass(frozen=True)
class DiscFrame:
    """Disc with a real center; only its real diameter is measured."""

    center: float
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise PreconditionViolatedError(f"disc radius must be positive, got {self.radius}")
        if complex(self.center).imag != 0:
            raise PreconditionViolatedError("disc frames need a real center")
        object.__setattr__(self, "center", float(complex(self.center).real))

    @classmethod
    def from_spec(cls, disc: DiscSpec) -> "DiscFrame":
        return cls(disc.center, disc.radius)

    @property
    def left(self) -> float:
        return self.center - self.radius

    def contains(self, x: float) -> bool:
        return abs(x - self.center) < self.radius

    def to_halfplane(self) -> Tuple[HalfPlaneFrame, Callable[[float], float]]:
        """The reciprocal frame H_{1/(2r)} and the map x ↦ 1/(x − (c − r)) onto it."""
        left = self.left

        def reciprocal(x: float) -> float:
            return 1.0 / (x - left)

        return HalfPlaneFrame(1.0 / (2.0 * self.radius)), reciprocal

    def distance(self, x1: float, x2: float) -> float:
        for x in (x1, x2):
            if not self.contains(x):
                raise OutsideFrameError(f"{x!r} is not inside the disc D({self.center}, {self.radius})")
        frame, reciprocal = self.to_halfplane()
        return frame.distance(reciprocal(x1), reciprocal(x2))


HyperbolicFrame = Union[HalfPlaneFrame, DiscFrame]


def hyperbolic_distance_real(frame: HyperbolicFrame, x1: float, x2: float) -> float:
    """
    Hyperbolic distance between two real points of a frame.

    Raises:
        OutsideFrameError: If a point is not interior to the frame
    """
    return frame.distance(float(x1), float(x2))
