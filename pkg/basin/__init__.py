"""Basin module: pixel-grid classification of the cauliflower and the wandering components."""

from .classify import (
    CauliflowerClassifier,
    GridClassifier,
    LambdaHeuristicClassifier,
    OrbitWindowClassifier,
    PixelClassifier,
    QuadraticHeuristicClassifier,
    WanderingClassifier,
    classify_cauliflower,
    classify_grid,
    classify_wandering,
    component_diameter,
    extract_inside_points,
    rescale_component,
    reverify_inside,
)
from .grid import ClassifiedGrid, GridSpec, PixelVerdict, PointSet, Verdict
from .render import decode_run_length, encode_ppm, encode_run_length, grid_to_ppm, side_by_side

__all__ = [
    "CauliflowerClassifier",
    "GridClassifier",
    "LambdaHeuristicClassifier",
    "OrbitWindowClassifier",
    "PixelClassifier",
    "QuadraticHeuristicClassifier",
    "WanderingClassifier",
    "classify_cauliflower",
    "classify_grid",
    "classify_wandering",
    "component_diameter",
    "extract_inside_points",
    "rescale_component",
    "reverify_inside",
    "ClassifiedGrid",
    "GridSpec",
    "PixelVerdict",
    "PointSet",
    "Verdict",
    "decode_run_length",
    "encode_ppm",
    "encode_run_length",
    "grid_to_ppm",
    "side_by_side",
]
