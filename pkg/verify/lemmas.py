"""
Lemma Checks - Dense-sampling verification of the construction's inequalities.

Each check samples its region deterministically, evaluates a vectorized margin
function (positive exactly when the inequality holds at a sample) and reduces
to a VerificationReport. Margin functions are public so a report's witness can
be re-evaluated independently.
"""

import logging
import math
from typing import Optional

import numpy as np

from dynamics.maps import (
    TWO_PI,
    MIN_TRAP_INDEX,
    compose_phi,
    compose_psi,
    eval_f,
    eval_g,
    eval_q,
    eval_w,
    h_local,
    iterate_q,
)
from dynamics.real import paired_real_orbits
from errors import NotReachedError, PreconditionViolatedError

from .regions import DiscSpec, HalfPlaneSpec, circle_radius, trap_radius
from .report import VerificationReport, sampled_margins
from .sampling import circle_points, disc_points, halfplane_points, interval_points

logger = logging.getLogger(__name__)

# Lower drift constant of w_n on H_{3nπ}
DRIFT_LOWER = 2.0 / 3.0

# Upper drift constant supported by |s| < (27/26)nπ and |s/t| < 9/26 on H_{3nπ}.
# The tighter 11/8 is only reached away from the boundary line; it is reported
# in the details.
DRIFT_UPPER = 27.0 / 17.0
DRIFT_UPPER_STATED = 11.0 / 8.0

COMPOSITION_TOLERANCE = 1e-9
G_CONVERGENCE_SLACK = 1e-6
PHI_SEARCH_LIMIT = 1_000_000


# ---------------------------------------------------------------------------
# Half-plane drift of w_n
# ---------------------------------------------------------------------------

def drift_offsets(n: int, t: np.ndarray) -> np.ndarray:
    """Re w_n(t) − Re t, in units of nπ."""
    return (np.real(eval_w(n, t)) - np.real(t)) / (n * math.pi)


def halfplane_drift_margins(n: int, t: np.ndarray, upper: float = DRIFT_UPPER) -> np.ndarray:
    """min(Re w_n(t) − Re t − (2/3)nπ, Re t + upper·nπ − Re w_n(t))."""
    offset = drift_offsets(n, t)
    return n * math.pi * np.minimum(offset - DRIFT_LOWER, upper - offset)


def check_halfplane_drift(
    n: int,
    samples: int = 10_000,
    upper: float = DRIFT_UPPER,
    workers: Optional[int] = None,
) -> VerificationReport:
    """
    Check Re t + (2/3)nπ < Re w_n(t) < Re t + upper·nπ on a truncated H_{3nπ}.

    Args:
        n: Index n >= 1
        samples: Approximate sample count (>= 100)
        upper: Upper drift constant
        workers: Thread cap for margin evaluation

    Returns:
        VerificationReport; details carry the separate lower/upper margins and
        the margin against the constant 11/8
    """
    if n < 1:
        raise PreconditionViolatedError(f"n must be >= 1, got {n}")
    if samples < 100:
        raise PreconditionViolatedError(f"samples must be >= 100, got {samples}")

    t = halfplane_points(HalfPlaneSpec.for_index(n).a, samples)
    offsets = sampled_margins(lambda chunk: drift_offsets(n, chunk), t, workers)
    scale = n * math.pi
    margins = scale * np.minimum(offsets - DRIFT_LOWER, upper - offsets)
    return VerificationReport.from_margins(
        lemma_id="halfplane-drift",
        parameter_range=f"n={n}",
        points=t,
        margins=margins,
        indices={"n": n},
        scale=scale,
        details={
            "lower_margin": float(scale * np.min(offsets - DRIFT_LOWER)),
            "upper_margin": float(scale * np.min(upper - offsets)),
            "stated_upper_margin": float(scale * np.min(DRIFT_UPPER_STATED - offsets)),
            "max_offset": float(np.max(offsets)),
            "truncation": "Re t <= 1e4, |Im t| <= 1e3",
        },
    )


def check_halfplane_inclusion(n: int, samples: int = 10_000, workers: Optional[int] = None) -> VerificationReport:
    """Check w_n(H_{3nπ}) ⊂ H_{3(n+1)π} for n ≥ 5 (margin Re w_n(t) − 3(n+1)π)."""
    if n < MIN_TRAP_INDEX:
        raise PreconditionViolatedError(f"n must be >= {MIN_TRAP_INDEX}, got {n}")
    target = HalfPlaneSpec.for_index(n + 1).a
    t = halfplane_points(HalfPlaneSpec.for_index(n).a, samples)
    margins = sampled_margins(lambda chunk: np.real(eval_w(n, chunk)) - target, t, workers)
    return VerificationReport.from_margins(
        lemma_id="halfplane-inclusion",
        parameter_range=f"n={n}",
        points=t,
        margins=margins,
        indices={"n": n},
        scale=n * math.pi,
    )


# ---------------------------------------------------------------------------
# Disc inclusion h_n(D_n) ⊂ D_{n+1}
# ---------------------------------------------------------------------------

def disc_inclusion_margins(n: int, zeta: np.ndarray) -> np.ndarray:
    """r_{n+1} − |h_n(ζ) − c_{n+1}| for local points ζ (relative to 2nπ)."""
    target = DiscSpec.trap(n + 1)
    return target.radius - np.abs(h_local(n, zeta) - target.center)


def check_disc_inclusion(n: int, boundary_samples: int = 4096, workers: Optional[int] = None) -> VerificationReport:
    """
    Check f(D▷_n) ⊂ D▷_{n+1} on the boundary of D▷_n.

    Boundary sampling suffices by the maximum principle. The computation runs
    in local coordinates, where f on D▷_n is h_n on D_n. Indices below 5 are
    evaluated but fall outside the range the inclusion is claimed for.
    """
    if n < 1:
        raise PreconditionViolatedError(f"n must be >= 1, got {n}")
    if n < MIN_TRAP_INDEX:
        logger.warning(f"Disc inclusion at n={n} is below the first trap index {MIN_TRAP_INDEX}")

    zeta = DiscSpec.trap(n).boundary(boundary_samples)
    margins = sampled_margins(lambda chunk: disc_inclusion_margins(n, chunk), zeta, workers)
    report = VerificationReport.from_margins(
        lemma_id="disc-inclusion",
        parameter_range=f"n={n}",
        points=zeta,
        margins=margins,
        indices={"n": n},
        scale=trap_radius(n + 1),
        details={"method": "boundary (maximum principle)", "in_range": n >= MIN_TRAP_INDEX},
    )
    report.details["local_witness"] = report.witness
    report.witness = report.witness + n * TWO_PI
    return report


# ---------------------------------------------------------------------------
# Circle expansion |h_{m+n}(C_m)| > 2/(mπ)
# ---------------------------------------------------------------------------

def circle_expansion_margins(m: int, n: int, z: np.ndarray) -> np.ndarray:
    """|h_{m+n}(z)| − 2/(mπ)."""
    return np.abs(h_local(m + n, z)) - circle_radius(m)


def check_circle_expansion(m: int, n: int, samples: int = 4096, workers: Optional[int] = None) -> VerificationReport:
    """Check that h_{m+n} pushes every point of C_m strictly outside C_m."""
    if m < 1 or n < 0:
        raise PreconditionViolatedError(f"need m >= 1 and n >= 0, got m={m}, n={n}")
    if samples < 100:
        raise PreconditionViolatedError(f"samples must be >= 100, got {samples}")

    z = circle_points(0j, circle_radius(m), samples)
    margins = sampled_margins(lambda chunk: circle_expansion_margins(m, n, chunk), z, workers)
    return VerificationReport.from_margins(
        lemma_id="circle-expansion",
        parameter_range=f"m={m} n={n}",
        points=z,
        margins=margins,
        indices={"m": m, "n": n},
        scale=circle_radius(m),
    )


# ---------------------------------------------------------------------------
# Scaled maps g_m → q
# ---------------------------------------------------------------------------

def g_deviation_profile(r: float = 1.0, m_max: int = 200, samples: int = 10_000):
    """
    Return (s, witnesses): s[m−1] = sup_{|z|≤r} |g_m(z) − q(z)| over a polar grid.

    The grid includes the boundary circle, where the sup sits.
    """
    if not 0 < r <= 5:
        raise PreconditionViolatedError(f"r must lie in (0, 5], got {r}")
    if m_max < 1:
        raise PreconditionViolatedError(f"m_max must be >= 1, got {m_max}")

    z = disc_points(r, samples)
    q = eval_q(z)
    s = np.empty(m_max)
    witnesses = np.empty(m_max, dtype=complex)
    for m in range(1, m_max + 1):
        deviation = np.abs(eval_g(m, z) - q)
        k = int(np.argmax(deviation))
        s[m - 1] = deviation[k]
        witnesses[m - 1] = z[k]
    return s, witnesses


def check_g_uniform_convergence(r: float = 1.0, m_max: int = 200, samples: int = 10_000) -> VerificationReport:
    """
    Check |g_m − q| ≤ μ/m on |z| ≤ r, with μ = s₁ fit at m = 1.

    Margins are μ/m·(1 + 10⁻⁶) − s_m for m = 1..m_max.
    """
    s, witnesses = g_deviation_profile(r, m_max, samples)
    mu = float(s[0])
    m_values = np.arange(1, m_max + 1)
    margins = mu / m_values * (1.0 + G_CONVERGENCE_SLACK) - s
    scaled = m_values * s
    return VerificationReport.from_margins(
        lemma_id="g-convergence",
        parameter_range=f"r={r} m=1..{m_max}",
        points=witnesses,
        margins=margins,
        scale=mu,
        details={
            "mu": mu,
            "strictly_decreasing": bool(np.all(np.diff(s) < 0)),
            "max_m_times_s": float(np.max(scaled)),
            "last_m_times_s": float(scaled[-1]),
        },
        index_arrays={"m": m_values},
    )


def check_g_equicontinuity(
    r: float = 1.0,
    epsilon: float = 0.5,
    m_max: Optional[int] = None,
    samples: int = 2000,
    directions: int = 8,
) -> VerificationReport:
    """
    Check |g_m(z₁) − g_m(z₂)| < ε whenever |z₁ − z₂| < δ, for M ≤ m ≤ m_max.

    M is the least m with μ/m < ε/3 and δ = ε / (3(1 + 2πr)) comes from the
    Lipschitz bound of q on the disc. Pairs are z₁ on a polar grid and
    z₂ = z₁ + δ·e^{iθ}, kept when z₂ stays in the disc.
    """
    if not epsilon > 0:
        raise PreconditionViolatedError(f"epsilon must be positive, got {epsilon}")
    s, _ = g_deviation_profile(r, 1, samples)
    mu = float(s[0])
    big_m = int(math.floor(3.0 * mu / epsilon)) + 1
    m_max = m_max if m_max is not None else 2 * big_m
    if m_max < big_m:
        raise PreconditionViolatedError(f"m_max={m_max} is below the threshold index M={big_m}")
    delta = epsilon / (3.0 * (1.0 + 2.0 * math.pi * r))

    z1 = disc_points(r, samples)
    steps = delta * (1.0 - 1e-9) * np.exp(2j * math.pi * (np.arange(directions) + 0.5) / directions)
    pairs_1 = np.repeat(z1, directions)
    pairs_2 = pairs_1 + np.tile(steps, len(z1))
    keep = np.abs(pairs_2) <= r
    pairs_1, pairs_2 = pairs_1[keep], pairs_2[keep]

    margins = []
    witnesses = []
    for m in range(big_m, m_max + 1):
        spread = np.abs(eval_g(m, pairs_1) - eval_g(m, pairs_2))
        k = int(np.argmax(spread))
        margins.append(epsilon - spread[k])
        witnesses.append(pairs_1[k])
    return VerificationReport.from_margins(
        lemma_id="g-equicontinuity",
        parameter_range=f"r={r} eps={epsilon} m={big_m}..{m_max}",
        points=np.array(witnesses),
        margins=np.array(margins),
        scale=epsilon,
        details={"mu": mu, "M": big_m, "delta": delta, "pairs": int(len(pairs_1))},
        index_arrays={"m": np.arange(big_m, m_max + 1)},
    )


# ---------------------------------------------------------------------------
# φ_{m,n} → qⁿ
# ---------------------------------------------------------------------------

def phi_deviation(m: int, n: int, z: np.ndarray, qn: Optional[np.ndarray] = None) -> float:
    """sup over z of |qⁿ(z) − φ_{m,n}(z)|."""
    if qn is None:
        qn = iterate_q(z, n)
    return float(np.max(np.abs(qn - compose_phi(m, n, z))))


def check_phi_approximates_qn(
    n: int,
    r: float,
    epsilon: float,
    samples: int = 2000,
    m_limit: int = PHI_SEARCH_LIMIT,
) -> int:
    """
    Return the least m ≤ m_limit with sup_{|z|≤r} |qⁿ(z) − φ_{m,n}(z)| < ε.

    The deviation falls roughly like 1/m, so m doubles until the bound is
    reached and the last doubling step is then bisected. The value is the
    observed threshold on the grid, not a proven minimal M.

    Raises:
        NotReachedError: If no m ≤ m_limit reaches ε
    """
    if n < 0 or n > 12:
        raise PreconditionViolatedError(f"n must lie in 0..12, got {n}")
    if not 0 < r <= 1:
        raise PreconditionViolatedError(f"r must lie in (0, 1], got {r}")

    z = disc_points(r, samples)
    qn = iterate_q(z, n)

    def reached(m: int) -> bool:
        with np.errstate(over="ignore", invalid="ignore"):
            return phi_deviation(m, n, z, qn) < epsilon

    low, high = 0, 1
    while not reached(high):
        if high >= m_limit:
            raise NotReachedError(f"no m <= {m_limit} brings phi_(m,{n}) within {epsilon} of q^{n}")
        low, high = high, min(2 * high, m_limit)
    # low fails (or is 0), high passes
    while high - low > 1:
        middle = (low + high) // 2
        if reached(middle):
            high = middle
        else:
            low = middle
    logger.debug(f"phi approximation n={n} r={r} eps={epsilon}: M={high}")
    return high


def phi_approximation_report(n: int, r: float = 0.5, epsilon: float = 0.05, samples: int = 2000) -> VerificationReport:
    """Find M for φ_{m,n} ≈ qⁿ and re-verify the bound at 2M."""
    big_m = check_phi_approximates_qn(n, r, epsilon, samples)
    z = disc_points(r, samples)
    margins = epsilon - np.abs(iterate_q(z, n) - compose_phi(2 * big_m, n, z))
    return VerificationReport.from_margins(
        lemma_id="phi-approximation",
        parameter_range=f"n={n} r={r} eps={epsilon}",
        points=z,
        margins=margins,
        indices={"n": n, "M": big_m, "m": 2 * big_m},
        scale=epsilon,
    )


# ---------------------------------------------------------------------------
# Composition identities against direct iteration of f
# ---------------------------------------------------------------------------

def direct_local_orbit(m: int, n: int, z: complex) -> complex:
    """T^{−(m+n)} ∘ fⁿ ∘ Tᵐ(z) by iterating f in absolute coordinates."""
    w = z + m * TWO_PI
    for _ in range(n):
        w = eval_f(w)
    return w - (m + n) * TWO_PI


def composition_margins(m: int, n: int, z: complex) -> float:
    """Worst of the ψ and φ identity margins tol·max(1, |result|) − error."""
    oracle_psi = direct_local_orbit(m, n, z)
    psi = compose_psi(m, n, z)
    psi_margin = COMPOSITION_TOLERANCE * max(1.0, abs(psi)) - abs(psi - oracle_psi)

    phi = compose_phi(m, n, m * z)
    oracle_phi = (m + n) * oracle_psi
    phi_margin = COMPOSITION_TOLERANCE * max(1.0, abs(phi)) - abs(phi - oracle_phi)
    return min(psi_margin, phi_margin)


def check_composition_oracle(samples: int = 1000, seed: int = 0, m_max: int = 50, n_max: int = 20) -> VerificationReport:
    """
    Compare ψ_{m,n} and φ_{m,n} with direct f-iteration on random triples.

    m is drawn from 1..m_max, n from 0..n_max, and z uniformly from D_m
    (φ is evaluated at m·z so that its argument scales back into D_m).
    """
    rng = np.random.default_rng(seed)
    ms = rng.integers(1, m_max + 1, size=samples)
    ns = rng.integers(0, n_max + 1, size=samples)
    radius = np.sqrt(rng.random(samples))
    angle = TWO_PI * rng.random(samples)

    points = np.empty(samples, dtype=complex)
    margins = np.empty(samples)
    for k in range(samples):
        disc = DiscSpec.trap(int(ms[k]))
        points[k] = disc.center + disc.radius * radius[k] * np.exp(1j * angle[k])
        margins[k] = composition_margins(int(ms[k]), int(ns[k]), complex(points[k]))

    return VerificationReport.from_margins(
        lemma_id="composition",
        parameter_range=f"m<={m_max} n<={n_max} seed={seed}",
        points=points,
        margins=margins,
        scale=COMPOSITION_TOLERANCE,
        index_arrays={"m": ms, "n": ns},
    )


# ---------------------------------------------------------------------------
# Real orderings along the paired orbits
# ---------------------------------------------------------------------------

def check_ordering_sequences(m: int, y0: float, steps: int = 50) -> VerificationReport:
    """
    Check the orderings of x_n = fⁿ(T⁻¹(f(y₀))) and y_n = fⁿ(y₀) for n ≤ steps.

    In local coordinates ξ_n = x_n − 2(m+n)π, η_n = y_n − 2(m+n)π:
      membership    ξ_n, η_n ∈ (0, 2r_{m+n})
      descent       ξ_n > ξ_{n+1} > 0 and η_n > η_{n+1} > 0
      commutation   T∘f − f∘T = 2π(1 − cos) > 0 at x_n and y_n
      gap           η_n > ξ_n
      interleave    ξ_n ≥ η_{n+1} (equality at n = 0, checked separately)
      shifted       ξ_n ∈ (0, 2r_{m+n+1})

    Raises:
        PreconditionViolatedError: If y0 is outside (2mπ, 2mπ + 1/(3mπ))
    """
    if m < MIN_TRAP_INDEX:
        raise PreconditionViolatedError(f"m must be >= {MIN_TRAP_INDEX}, got {m}")
    orbits = paired_real_orbits(m, y0, steps + 1)
    xi, eta = orbits.xi, orbits.eta

    idx = np.arange(steps + 1)
    diam = 2.0 * np.array([trap_radius(m + n) for n in idx])
    diam_next = 2.0 * np.array([trap_radius(m + n + 1) for n in idx])
    x, y = xi[: steps + 1], eta[: steps + 1]
    x_next, y_next = xi[1:], eta[1:]

    conclusions = {
        "membership": np.minimum.reduce([x, diam - x, y, diam - y]),
        "descent": np.minimum.reduce([x - x_next, x_next, y - y_next, y_next]),
        "commutation": 2.0 * TWO_PI * np.minimum(np.sin(0.5 * x) ** 2, np.sin(0.5 * y) ** 2),
        "gap": y - x,
        "interleave": np.where(idx >= 1, x - y_next, np.inf),
        "shifted": np.minimum(x, diam_next - x),
    }

    identity_error = abs(xi[0] - eta[1])
    stacked = np.vstack(list(conclusions.values()))
    margins = stacked.min(axis=0)
    if identity_error != 0.0:
        margins[0] = -identity_error

    points = np.array([orbits.absolute_x(n) for n in idx], dtype=complex)
    report = VerificationReport.from_margins(
        lemma_id="ordering",
        parameter_range=f"m={m} y0={y0!r} N={steps}",
        points=points,
        margins=margins,
        indices={"m": m},
        scale=trap_radius(m),
        details={
            "identity_error": float(identity_error),
            **{name: float(values.min()) for name, values in conclusions.items()},
        },
        index_arrays={"n": idx},
    )
    return report


# ---------------------------------------------------------------------------
# Monotonicity of f on the real traces of D▷_m and T(D▷_m)
# ---------------------------------------------------------------------------

def derivative_local(k: int, t: np.ndarray) -> np.ndarray:
    """f′(2kπ + t) = cos t − (2kπ + t) sin t."""
    return np.cos(t) - (k * TWO_PI + t) * np.sin(t)


def check_monotone_increasing_on_discs(m: int, samples: int = 1000) -> VerificationReport:
    """Check f′ > 0 on D▷_m ∩ ℝ and on T(D▷_m) ∩ ℝ."""
    if m < MIN_TRAP_INDEX:
        raise PreconditionViolatedError(f"m must be >= {MIN_TRAP_INDEX}, got {m}")
    t = interval_points(0.0, 2.0 * trap_radius(m), samples)
    ks = np.concatenate([np.full(samples, m), np.full(samples, m + 1)])
    offsets = np.concatenate([t, t])
    margins = derivative_local(m, t), derivative_local(m + 1, t)
    return VerificationReport.from_margins(
        lemma_id="monotone",
        parameter_range=f"m={m}",
        points=(ks * TWO_PI + offsets).astype(complex),
        margins=np.concatenate(margins),
        indices={"m": m},
        index_arrays={"k": ks},
    )
