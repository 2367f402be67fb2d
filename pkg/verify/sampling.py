"""
Sampling - Deterministic sample grids for the inequality checks.

Circles use uniform angles offset by half a step; half-planes use log-spaced
rectangles; discs use polar grids that include the boundary circle.
"""

import math

import numpy as np

from errors import PreconditionViolatedError

# Truncation of unbounded half-planes
HALFPLANE_RE_MAX = 1.0e4
HALFPLANE_IM_MAX = 1.0e3

# Relative offset of the first abscissa from the half-plane boundary
HALFPLANE_INSET = 1.0e-6


def circle_points(center: complex, radius: float, samples: int) -> np.ndarray:
    """Points center + r·e^{iθ_k}, θ_k = 2π(k + ½)/samples."""
    if samples < 1:
        raise PreconditionViolatedError(f"samples must be positive, got {samples}")
    theta = 2.0 * math.pi * (np.arange(samples) + 0.5) / samples
    return center + radius * np.exp(1j * theta)


def interval_points(lower: float, upper: float, samples: int) -> np.ndarray:
    """Midpoints of `samples` equal cells of the open interval (lower, upper)."""
    if samples < 1:
        raise PreconditionViolatedError(f"samples must be positive, got {samples}")
    return lower + (upper - lower) * (np.arange(samples) + 0.5) / samples


def halfplane_points(a: float, samples: int) -> np.ndarray:
    """
    Log-spaced rectangle in H_a, truncated to Re t ≤ 10⁴ and |Im t| ≤ 10³.

    Abscissae start at a·(1 + 10⁻⁶) and crowd toward the boundary; ordinates
    are 0 plus a symmetric log-spaced ladder from 10⁻³ to 10³.
    """
    if samples < 4:
        raise PreconditionViolatedError(f"half-plane grid needs at least 4 samples, got {samples}")
    if not 0 < a < HALFPLANE_RE_MAX:
        raise PreconditionViolatedError(f"half-plane abscissa {a} outside (0, {HALFPLANE_RE_MAX})")

    n_re = max(2, int(math.sqrt(samples)))
    n_im = max(3, samples // n_re)
    half = (n_im - 1) // 2

    re = a + np.geomspace(a * HALFPLANE_INSET, HALFPLANE_RE_MAX - a, n_re)
    ladder = np.geomspace(1.0e-3, HALFPLANE_IM_MAX, half)
    im = np.concatenate([-ladder[::-1], [0.0], ladder])

    grid_re, grid_im = np.meshgrid(re, im)
    return (grid_re + 1j * grid_im).ravel()


def disc_points(radius: float, samples: int) -> np.ndarray:
    """
    Polar grid of the closed disc |z| ≤ radius, boundary circle included.

    Rings are equally spaced in radius from 0 to the boundary; each ring
    carries the same number of half-offset angles.
    """
    if samples < 4:
        raise PreconditionViolatedError(f"disc grid needs at least 4 samples, got {samples}")
    n_rings = max(2, int(math.sqrt(samples / 4)))
    n_angles = max(2, samples // n_rings)
    radii = radius * np.linspace(0.0, 1.0, n_rings)
    theta = 2.0 * math.pi * (np.arange(n_angles) + 0.5) / n_angles
    return (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()
