"""
Contraction - Hyperbolic contraction along real orbits near the boundary points 2nπ.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from dynamics.maps import MIN_TRAP_INDEX, eval_w
from dynamics.real import PairedOrbits, paired_real_orbits
from errors import InvariantViolationError, NotReachedError, PreconditionViolatedError
from verify.regions import DiscSpec

from .hyperbolic import DiscFrame, HalfPlaneFrame, hyperbolic_distance_real

logger = logging.getLogger(__name__)

# Drift constant bounding t_{n+1} − t_n by (11/8)(m+n)π, claimed from n = 1 on
STEP_CONSTANT = 11.0 / 8.0

# Slack for comparing two routes to the same hyperbolic distance
DISTANCE_SLACK = 1e-12


@dataclass
class ContractionTrace:
    """t_n = w_{m+n−1} ∘ … ∘ w_m(t₀) and the hyperbolic steps between them."""

    m: int
    t: np.ndarray
    distances: np.ndarray
    distance_bounds: np.ndarray
    step_bounds: np.ndarray
    lower_bounds: np.ndarray

    @property
    def steps(self) -> np.ndarray:
        return np.diff(self.t)

    @property
    def boundary_distances(self) -> np.ndarray:
        """|z_n − 2(m+n)π| = 1/t_n for the conjugate points z_n = 1/t_n + 2(m+n)π."""
        return 1.0 / self.t

    @property
    def first_step_within_bound(self) -> bool:
        return bool(self.steps[0] < self.step_bounds[0])


def distance_bound(m: int, n: int) -> float:
    """(11/8)(m+n)π / ((π/3)·n·(2m+n−1)) for n ≥ 1."""
    return STEP_CONSTANT * (m + n) * math.pi / ((math.pi / 3.0) * n * (2 * m + n - 1))


def growth_lower_bound(m: int, n: int) -> float:
    """b_{m,n} = 3(m+1)π + (π/3)·n·(2m+n−1)."""
    return 3.0 * (m + 1) * math.pi + (math.pi / 3.0) * n * (2 * m + n - 1)


def contraction_experiment(m: int, t0: float, steps: int) -> ContractionTrace:
    """
    Follow the real point t₀ under the maps w_k and measure d_n in H_{3(m+n+1)π}.

    d_n = d(t_n, t_{n+1}) in the half-plane H_{3(m+n+1)π}, for n = 0..steps−1.

    Raises:
        PreconditionViolatedError: If m < 5 or t0 ≤ 3(m+1)π
        InvariantViolationError: If t_n fails to increase, leaves H_{3(m+n+1)π},
            falls below b_{m,n}, or a step or distance exceeds its bound for n ≥ 1
    """
    if m < MIN_TRAP_INDEX:
        raise PreconditionViolatedError(f"m must be >= {MIN_TRAP_INDEX}, got {m}")
    if not t0 > 3.0 * (m + 1) * math.pi:
        raise PreconditionViolatedError(f"t0={t0!r} is not in H_(3(m+1)π)")
    if steps < 1:
        raise PreconditionViolatedError(f"steps must be >= 1, got {steps}")

    t = np.empty(steps + 1)
    t[0] = t0
    for n in range(steps):
        t[n + 1] = float(np.real(eval_w(m + n, complex(t[n]))))

    distances = np.empty(steps)
    bounds = np.full(steps, np.nan)
    step_bounds = STEP_CONSTANT * (m + np.arange(steps)) * math.pi
    lower = np.array([growth_lower_bound(m, n) for n in range(steps + 1)])

    for n in range(steps):
        frame = HalfPlaneFrame(3.0 * (m + n + 1) * math.pi)
        if not t[n + 1] > t[n]:
            raise InvariantViolationError(f"t_{n + 1}={t[n + 1]!r} does not exceed t_{n}={t[n]!r}")
        if not frame.contains(t[n]):
            raise InvariantViolationError(f"t_{n}={t[n]!r} is not in H_{frame.a}")
        if not t[n] >= lower[n]:
            raise InvariantViolationError(f"t_{n}={t[n]!r} is below b_(m,n)={lower[n]!r}")
        distances[n] = hyperbolic_distance_real(frame, t[n], t[n + 1])
        if n >= 1:
            bounds[n] = distance_bound(m, n)
            if not distances[n] < bounds[n]:
                raise InvariantViolationError(f"d_{n}={distances[n]!r} exceeds its bound {bounds[n]!r}")
            if not t[n + 1] - t[n] < step_bounds[n]:
                raise InvariantViolationError(f"step {n} of {t[n + 1] - t[n]!r} exceeds {step_bounds[n]!r}")

    trace = ContractionTrace(
        m=m,
        t=t,
        distances=distances,
        distance_bounds=bounds,
        step_bounds=step_bounds,
        lower_bounds=lower,
    )
    if not trace.first_step_within_bound:
        logger.warning(
            f"First step {trace.steps[0]:.6f} exceeds {step_bounds[0]:.6f}; t0 is close to the half-plane boundary"
        )
    logger.info(f"Contraction m={m} t0={t0!r}: d_last={distances[-1]:.3e} after {steps} steps")
    return trace


@dataclass
class WanderingContractionTrace:
    """Bounds on the hyperbolic distance between x_n and y_n, n = 1..N."""

    orbits: PairedOrbits
    direct: np.ndarray
    bounds: np.ndarray

    @property
    def final_bound(self) -> float:
        return float(self.bounds[-1])


def wandering_contraction(m: int, y0: float, steps: int, epsilon: Optional[float] = None) -> WanderingContractionTrace:
    """
    Bound d(x_n, y_n) by the distance from x_n to T(x_{n−1}) in D▷_{m+n}.

    The real points x_n < y_n ≤ T(x_{n−1}) lie on a diameter of D▷_{m+n}, so the
    direct distance is at most the bound; the Fatou component containing the
    disc has a smaller hyperbolic density, so the bound carries over to it.
    Computed in local coordinates, where D▷_{m+n} is D_{m+n}. With epsilon
    given, the final bound must fall below it.

    Raises:
        PreconditionViolatedError: If y0 is outside D▷_m ∩ ℝ
        InvariantViolationError: If a direct distance exceeds its bound
        NotReachedError: If the final bound is not below epsilon
    """
    if m < MIN_TRAP_INDEX:
        raise PreconditionViolatedError(f"m must be >= {MIN_TRAP_INDEX}, got {m}")
    if steps < 1:
        raise PreconditionViolatedError(f"steps must be >= 1, got {steps}")
    orbits = paired_real_orbits(m, y0, steps)

    direct = np.empty(steps)
    bounds = np.empty(steps)
    for n in range(1, steps + 1):
        frame = DiscFrame.from_spec(DiscSpec.trap(m + n))
        bounds[n - 1] = hyperbolic_distance_real(frame, orbits.xi[n], orbits.xi[n - 1])
        direct[n - 1] = hyperbolic_distance_real(frame, orbits.xi[n], orbits.eta[n])
        if direct[n - 1] > bounds[n - 1] + DISTANCE_SLACK:
            raise InvariantViolationError(
                f"d(x_{n}, y_{n})={direct[n - 1]!r} exceeds d(x_{n}, T(x_{n - 1}))={bounds[n - 1]!r}"
            )

    logger.info(f"Wandering contraction m={m}: final bound {bounds[-1]:.3e} after {steps} steps")
    if epsilon is not None and not bounds[-1] < epsilon:
        raise NotReachedError(f"bound {bounds[-1]!r} after {steps} steps is not below {epsilon}")
    return WanderingContractionTrace(orbits=orbits, direct=direct, bounds=bounds)
