"""
Real Dynamics - Fixed points, multipliers and escaping negative orbits of f on ℝ.

Real fixed points x ≠ 0 solve cos x = 1 − 2π/x. Inside (0, 2π) these are π
(multiplier −1) and 4π/3; every window (2nπ, 2(n+1)π), n ≥ 1, holds two
repelling ones, 2nπ + η_{2n} and 2(n+1)π − η_{2n+1}.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np
from scipy.optimize import bisect

from errors import BracketFailureError, NotFoundError, PreconditionViolatedError
from .maps import TWO_PI, eval_f, h_local

logger = logging.getLogger(__name__)

# Samples per window when scanning for sign changes
SCAN_SAMPLES = 10_000

# Halving steps for the escaping-point search: x0 = -delta * 2^-j
ESCAPE_REFINEMENTS = 40

FIXED_POINT_TOLERANCE = 1e-10


@dataclass(frozen=True)
class FixedPointRecord:
    """A real fixed point of f with its multiplier and window bookkeeping."""

    x: float
    multiplier: float
    interval_index: int
    eta: float

    @property
    def residual(self) -> float:
        """|f(x) − x|."""
        return abs(float(eval_f(self.x).real) - self.x)

    @property
    def is_repelling(self) -> bool:
        return abs(self.multiplier) > 1


@dataclass(frozen=True)
class EscapeWitness:
    """A point x0 in (−δ, 0) whose n-th iterate satisfies f^n(x0) ≤ 2nπ − π/2."""

    x0: float
    n: int
    value: float

    def reverify(self) -> bool:
        """Recompute f^n(x0) by direct iteration and re-check the inequality."""
        w = complex(self.x0)
        for _ in range(self.n):
            w = eval_f(w)
        return self.n >= 2 and w.real <= self.n * TWO_PI - math.pi / 2


@dataclass(frozen=True)
class JuliaPreimage:
    """A point ξ in (x0, 0) mapped by f^n onto a repelling fixed point."""

    xi: float
    n: int
    fixed_point: float
    residual: float


def multiplier(x: float) -> float:
    """Return f′(x) = cos x − x sin x."""
    return math.cos(x) - x * math.sin(x)


def _fixed_point_equation(x: float) -> float:
    return math.cos(x) - 1.0 + TWO_PI / x


def _scan_roots(
    func: Callable[[float], float],
    lower: float,
    upper: float,
    samples: int,
) -> List[float]:
    """Bracket sign changes of func on a uniform grid and refine each by bisection."""
    xs = np.linspace(lower, upper, samples + 1)[1:-1]
    values = np.array([func(x) for x in xs])
    roots = []
    for i in range(len(xs) - 1):
        a, b = values[i], values[i + 1]
        if a == 0.0:
            roots.append(float(xs[i]))
        elif a * b < 0:
            roots.append(bisect(func, xs[i], xs[i + 1], xtol=1e-15, maxiter=200))
    return roots


def _record(x: float, window: int) -> FixedPointRecord:
    left = window * TWO_PI
    right = (window + 1) * TWO_PI
    return FixedPointRecord(
        x=x,
        multiplier=multiplier(x),
        interval_index=window,
        eta=min(x - left, right - x),
    )


def find_real_fixed_points(window_index: int, samples: int = SCAN_SAMPLES) -> List[FixedPointRecord]:
    """
    Locate the two fixed points of f in the window (2nπ, 2(n+1)π).

    Args:
        window_index: Window number n >= 1
        samples: Scan resolution per window

    Returns:
        Two FixedPointRecords ordered by x

    Raises:
        BracketFailureError: If the scan does not find exactly two sign changes
    """
    if window_index < 1:
        raise PreconditionViolatedError(f"window index must be >= 1, got {window_index}")

    lower = window_index * TWO_PI
    upper = (window_index + 1) * TWO_PI
    roots = _scan_roots(_fixed_point_equation, lower, upper, samples)
    if len(roots) != 2:
        raise BracketFailureError(
            f"expected two sign changes in window {window_index}, found {len(roots)}"
        )

    records = [_record(x, window_index) for x in sorted(roots)]
    logger.debug(
        f"Window {window_index}: fixed points {records[0].x:.12f}, {records[1].x:.12f}"
    )
    return records


def find_low_fixed_points(samples: int = SCAN_SAMPLES) -> List[FixedPointRecord]:
    """Locate the fixed points π and 4π/3 inside (0, 2π)."""
    # cos x − 1 + 2π/x is positive near 0, so start the scan slightly above it
    roots = _scan_roots(_fixed_point_equation, 0.1, TWO_PI, samples)
    if len(roots) != 2:
        raise BracketFailureError(f"expected two fixed points in (0, 2π), found {len(roots)}")
    return [_record(x, 0) for x in sorted(roots)]


def eta_sequence(max_index: int, samples: int = SCAN_SAMPLES) -> List[float]:
    """
    Return η_2, η_3, ..., η_max_index read off the window fixed points.

    Window n contributes η_{2n} (left gap) and η_{2n+1} (right gap).
    """
    if max_index < 2:
        return []
    etas = []
    for window in range(1, max_index // 2 + 1):
        left, right = find_real_fixed_points(window, samples)
        etas.append(left.x - window * TWO_PI)
        etas.append((window + 1) * TWO_PI - right.x)
    return etas[: max_index - 1]


def _local_orbit(x0: float, max_n: int) -> List[float]:
    """Real orbit in local coordinates x_k = f^k(x0) − 2kπ."""
    xs = [x0]
    x = x0
    for k in range(max_n):
        x = float(h_local(k, x).real)
        xs.append(x)
        if not math.isfinite(x):
            break
    return xs


def find_escaping_negative(delta: float, max_n: int = 200) -> EscapeWitness:
    """
    Find x0 in (−δ, 0) and n ≥ 2 with f^n(x0) ≤ 2nπ − π/2.

    Candidates are x0 = −δ·2^{−j} for j = 1..40, so −δ itself is never tried;
    each orbit is followed in local coordinates x_k = f^k(x0) − 2kπ, where the
    target reads x_n ≤ −π/2.

    Raises:
        NotFoundError: If no candidate escapes within max_n steps
    """
    if not 0 < delta < math.pi / 2:
        raise PreconditionViolatedError(f"delta must lie in (0, π/2), got {delta}")

    for j in range(1, ESCAPE_REFINEMENTS + 1):
        x0 = -delta * 2.0 ** (-j)
        if not x0 < 0:
            break
        orbit = _local_orbit(x0, max_n)
        for n in range(2, len(orbit)):
            if orbit[n] <= -math.pi / 2:
                witness = EscapeWitness(x0=x0, n=n, value=orbit[n] + n * TWO_PI)
                logger.info(f"Escape witness for delta={delta}: x0={x0!r}, n={n}")
                return witness

    raise NotFoundError(f"no escaping point in (-{delta}, 0) within {max_n} steps")


def find_julia_preimage(witness: EscapeWitness, samples: int = SCAN_SAMPLES) -> JuliaPreimage:
    """
    Locate ξ in (x0, 0) with f^n(ξ) = p for the repelling fixed point p = 2nπ − η_{2n−1}.

    p is the upper fixed point of window n−1; it lies strictly between
    f^n(x0) ≤ 2nπ − π/2 and f^n(0) = 2nπ, so f^n − p changes sign on [x0, 0].
    """
    n = witness.n
    _, upper = find_real_fixed_points(n - 1, samples)
    target = upper.x - n * TWO_PI  # −η_{2n−1} in local coordinates

    def offset(x: float) -> float:
        for k in range(n):
            x = float(h_local(k, x).real)
        return x - target

    xi = bisect(offset, witness.x0, 0.0, xtol=1e-15, maxiter=200)
    residual = abs(offset(xi))
    logger.debug(f"Preimage of fixed point {upper.x:.12f} under f^{n}: xi={xi!r}")
    return JuliaPreimage(xi=xi, n=n, fixed_point=upper.x, residual=residual)


@dataclass(frozen=True)
class PairedOrbits:
    """
    The real orbits x_n = fⁿ(x₀), y_n = fⁿ(y₀) with x₀ = T⁻¹(f(y₀)).

    Stored in local coordinates: xi[n] = x_n − 2(m+n)π, eta[n] = y_n − 2(m+n)π.
    """

    m: int
    xi: np.ndarray
    eta: np.ndarray

    @property
    def steps(self) -> int:
        return len(self.xi) - 1

    def absolute_x(self, n: int) -> float:
        return float(self.xi[n]) + (self.m + n) * TWO_PI

    def absolute_y(self, n: int) -> float:
        return float(self.eta[n]) + (self.m + n) * TWO_PI


def paired_real_orbits(m: int, y0: float, steps: int) -> PairedOrbits:
    """
    Follow y₀ ∈ D▷_m ∩ ℝ and its companion x₀ = T⁻¹(f(y₀)) for `steps` steps.

    In local coordinates ξ₀ = η₁ = h_m(η₀), and both sequences advance by
    h_{m+n}. Entries 0..steps are returned for each.

    Raises:
        PreconditionViolatedError: If y0 is outside (2mπ, 2mπ + 1/(3mπ))
    """
    if m < 1:
        raise PreconditionViolatedError(f"m must be >= 1, got {m}")
    if steps < 0:
        raise PreconditionViolatedError(f"steps must be >= 0, got {steps}")
    eta0 = y0 - m * TWO_PI
    if not 0 < eta0 < 1.0 / (3.0 * m * math.pi):
        raise PreconditionViolatedError(
            f"y0={y0!r} is not in D▷_{m} ∩ ℝ = (2mπ, 2mπ + 1/(3mπ))"
        )

    xi = np.empty(steps + 1)
    eta = np.empty(steps + 1)
    eta[0] = eta0
    xi[0] = float(h_local(m, eta0))
    for n in range(steps):
        xi[n + 1] = h_local(m + n, xi[n])
        eta[n + 1] = h_local(m + n, eta[n])
    return PairedOrbits(m=m, xi=xi, eta=eta)


def check_fixed_point_record(record: FixedPointRecord) -> Optional[str]:
    """Return a description of the first violated record invariant, or None."""
    if record.residual > FIXED_POINT_TOLERANCE:
        return f"residual {record.residual:.3e} exceeds {FIXED_POINT_TOLERANCE}"
    if record.x > TWO_PI and not abs(record.multiplier) > TWO_PI - 1:
        return f"multiplier {record.multiplier:.6f} not beyond 2π − 1"
    if record.interval_index >= 1 and not 0 < record.eta < math.pi / 2:
        return f"eta {record.eta:.6f} outside (0, π/2)"
    return None
