"""Metrics module: Hausdorff distance on point sets and hyperbolic distance on real diameters."""

from .contraction import (
    ContractionTrace,
    WanderingContractionTrace,
    contraction_experiment,
    distance_bound,
    growth_lower_bound,
    wandering_contraction,
)
from .hausdorff import DirectedWitness, HausdorffResult, directed_hausdorff, hausdorff_distance
from .hyperbolic import DiscFrame, HalfPlaneFrame, HyperbolicFrame, hyperbolic_distance_real

__all__ = [
    "ContractionTrace",
    "WanderingContractionTrace",
    "contraction_experiment",
    "distance_bound",
    "growth_lower_bound",
    "wandering_contraction",
    "DirectedWitness",
    "HausdorffResult",
    "directed_hausdorff",
    "hausdorff_distance",
    "DiscFrame",
    "HalfPlaneFrame",
    "HyperbolicFrame",
    "hyperbolic_distance_real",
]
