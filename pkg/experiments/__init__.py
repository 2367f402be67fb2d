"""Experiments module: convergence tables, pictures and the parameter-family exploration."""

from .convergence import (
    ConvergenceReport,
    ConvergenceRow,
    DiameterReport,
    DiameterRow,
    containment_radius,
    discretize_cauliflower,
    discretize_component,
    reverify_component,
    run_diameter_check,
    run_hausdorff_convergence,
)
from .figures import ComponentEstimate, OrbitWindowResult, estimate_component, render_cauliflower, run_orbit_window
from .lambda_family import (
    CLASSIFICATION_LABEL,
    LambdaExploreResult,
    LambdaRow,
    LambdaRunConfig,
    limiting_quadratic_label,
    run_lambda_explore,
    sidecar_metadata,
)

__all__ = [
    "ConvergenceReport",
    "ConvergenceRow",
    "DiameterReport",
    "DiameterRow",
    "containment_radius",
    "discretize_cauliflower",
    "discretize_component",
    "reverify_component",
    "run_diameter_check",
    "run_hausdorff_convergence",
    "ComponentEstimate",
    "OrbitWindowResult",
    "estimate_component",
    "render_cauliflower",
    "run_orbit_window",
    "CLASSIFICATION_LABEL",
    "LambdaExploreResult",
    "LambdaRow",
    "LambdaRunConfig",
    "limiting_quadratic_label",
    "run_lambda_explore",
    "sidecar_metadata",
]
