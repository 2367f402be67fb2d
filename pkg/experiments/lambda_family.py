"""
Lambda Family - Exploratory classification of f_λ(z) = z cos z + λ sin z + 2π near 2nπ.

Nothing here is sound: Inside means the orbit stayed within the exploration
radius for the whole budget. Every output is labelled HEURISTIC.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from basin.classify import (
    GridClassifier,
    LambdaHeuristicClassifier,
    QuadraticHeuristicClassifier,
    extract_inside_points,
    rescale_component,
)
from basin.grid import ClassifiedGrid, GridSpec, Verdict
from basin.render import side_by_side
from config import get_settings
from dynamics.maps import MIN_TRAP_INDEX, TWO_PI, FamilyParam, mandelbrot_param
from errors import EmptySetError
from metrics.hausdorff import hausdorff_distance

logger = logging.getLogger(__name__)

CLASSIFICATION_LABEL = "HEURISTIC"

# Window margin around the escape disc of q_λ
WINDOW_MARGIN = 1.1

LAMBDA_CSV_HEADER = "n,d_H,inside_fraction"


class LambdaRunConfig(BaseModel):
    """Parameters of one exploration run; unknown keys are rejected."""

    model_config = ConfigDict(extra="forbid")

    lam_re: float = 0.0
    lam_im: float = 0.0
    n_list: List[int] = Field(default_factory=lambda: [10, 20, 40])
    resolution: int = Field(default=256, ge=2)
    # Half-width in rescaled coordinates v = n(z − 2nπ); None sizes it from q_λ
    half_width: Optional[float] = Field(default=None, gt=0)
    max_iter: int = Field(default=200, ge=1)
    explore_radius: Optional[float] = Field(default=None, gt=0)

    @field_validator("n_list")
    @classmethod
    def _increasing_from_min_index(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("n_list must not be empty")
        if any(n < MIN_TRAP_INDEX for n in value):
            raise ValueError(f"every n must be >= {MIN_TRAP_INDEX}")
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError("n_list must be strictly increasing")
        return value

    @property
    def param(self) -> FamilyParam:
        return FamilyParam(complex(self.lam_re, self.lam_im))

    @property
    def radius(self) -> float:
        return self.explore_radius if self.explore_radius is not None else get_settings().explore_radius

    @property
    def rescaled_half_width(self) -> float:
        if self.half_width is not None:
            return self.half_width
        return WINDOW_MARGIN * QuadraticHeuristicClassifier(self.param).escape_radius

    def grid(self, n: int) -> GridSpec:
        """Window centered at 2nπ whose rescaling by n is the quadratic window."""
        return GridSpec.square(complex(n * TWO_PI, 0.0), self.rescaled_half_width / n, self.resolution)

    def quadratic_grid(self) -> GridSpec:
        return GridSpec.square(0j, self.rescaled_half_width, self.resolution)


def _coefficient_text(value: float) -> str:
    fraction = Fraction(value).limit_denominator(1000)
    if abs(float(fraction) - value) > 1e-12:
        return f"{value:.6g}"
    if fraction.denominator == 1:
        return str(fraction.numerator)
    return f"({fraction.numerator}/{fraction.denominator})"


def limiting_quadratic_label(param: FamilyParam) -> str:
    """Human-readable q_λ(z) = (1+λ)z − πz², e.g. (4/3)z − πz² for λ = 1/3."""
    a = param.linear_coefficient
    if a.imag != 0:
        return f"({a.real:.6g}{a.imag:+.6g}i)z − πz²"
    if a.real == 1:
        return "z − πz²"
    return f"{_coefficient_text(a.real)}z − πz²"


@dataclass(frozen=True)
class LambdaRow:
    """d_H between the rescaled heuristic component and the filled set of q_λ."""

    n: int
    d_H: Optional[float]
    inside_fraction: float

    def to_csv(self) -> str:
        d_H = "" if self.d_H is None else repr(self.d_H)
        return f"{self.n},{d_H},{self.inside_fraction!r}"


@dataclass
class LambdaExploreResult:
    config: LambdaRunConfig
    c: complex
    label: str
    quadratic: ClassifiedGrid
    grids: Dict[int, ClassifiedGrid] = field(default_factory=dict)
    rows: List[LambdaRow] = field(default_factory=list)

    def image(self, n: int) -> np.ndarray:
        """Rescaled heuristic picture of U_n next to the filled set of q_λ."""
        return side_by_side(self.grids[n].verdicts, self.quadratic.verdicts)

    def to_csv(self) -> str:
        return "\n".join([LAMBDA_CSV_HEADER] + [row.to_csv() for row in self.rows]) + "\n"


def _inside_fraction(grid: ClassifiedGrid) -> float:
    return grid.counts()[Verdict.INSIDE.name.lower()] / grid.verdicts.size


def run_lambda_explore(config: LambdaRunConfig, workers: Optional[int] = None) -> LambdaExploreResult:
    """
    Classify f_λ near 2nπ for each n and compare with the bounded-orbit set of q_λ.

    An empty discretization on either side leaves d_H unset for that n and
    logs a warning instead of failing the run.
    """
    param = config.param
    pool = GridClassifier(workers)
    logger.warning(f"λ={param.lam}: bounded-orbit classification is {CLASSIFICATION_LABEL}")

    quadratic = pool.classify(config.quadratic_grid(), QuadraticHeuristicClassifier(param, config.max_iter))
    try:
        filled = extract_inside_points(quadratic)
    except EmptySetError:
        filled = None
        logger.warning(f"q_λ has no bounded pixels at λ={param.lam}")

    result = LambdaExploreResult(
        config=config,
        c=mandelbrot_param(param),
        label=limiting_quadratic_label(param),
        quadratic=quadratic,
    )
    for n in config.n_list:
        classifier = LambdaHeuristicClassifier(n, param, config.max_iter, config.radius)
        grid = pool.classify(config.grid(n), classifier)
        result.grids[n] = grid

        d_H = None
        try:
            component = rescale_component(extract_inside_points(grid), n)
            if filled is not None:
                d_H = hausdorff_distance(component, filled, workers=workers).distance
        except EmptySetError:
            logger.warning(f"no tentatively Inside pixels near 2·{n}π at λ={param.lam}")
        result.rows.append(LambdaRow(n=n, d_H=d_H, inside_fraction=_inside_fraction(grid)))
        logger.info(f"λ-family n={n}: d_H={d_H}")

    return result


def sidecar_metadata(result: LambdaExploreResult) -> dict:
    """Metadata recorded next to every exploration output."""
    lam = result.config.param.lam
    return {
        "classification": CLASSIFICATION_LABEL,
        "lambda": [lam.real, lam.imag],
        "c": [result.c.real, result.c.imag],
        "quadratic": result.label,
        "explore_radius": result.config.radius,
        "run_config": result.config.model_dump(),
        "quadratic_escape_radius": QuadraticHeuristicClassifier(result.config.param).escape_radius,
    }
