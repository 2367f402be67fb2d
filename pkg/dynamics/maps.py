"""
Core Maps - Evaluates f(z) = z cos z + 2π and every change of variable built on it.

All maps accept a Python complex scalar or a numpy complex array and return
the same kind. Inputs must be finite.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from errors import DegenerateInputError, NonFiniteInputError, PreconditionViolatedError

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi

# First index whose shifted trap disc is known to lie in a Fatou component
MIN_TRAP_INDEX = 5

ComplexLike = Union[complex, float, np.ndarray]


@dataclass(frozen=True)
class FamilyParam:
    """Parameter λ of the family f_λ(z) = z cos z + λ sin z + 2π."""

    lam: complex = 0j

    @property
    def is_base(self) -> bool:
        """True when λ = 0, i.e. the family member is f itself."""
        return self.lam == 0

    @property
    def linear_coefficient(self) -> complex:
        """Coefficient 1 + λ of the limiting quadratic."""
        return 1 + complex(self.lam)


class MapKind(str, Enum):
    """Indexed maps that can be named by an IndexedMapId."""

    H = "h"
    W = "w"
    G = "g"
    PSI = "psi"
    PHI = "phi"


@dataclass(frozen=True)
class IndexedMapId:
    """An indexed map: h_n, w_n, g_n, ψ_{m,n} or φ_{m,n}."""

    kind: MapKind
    m: int = 0
    n: int = 0

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise PreconditionViolatedError(f"indices must be non-negative, got m={self.m}, n={self.n}")
        if self.kind in (MapKind.PSI, MapKind.PHI) and self.n >= 1 and self.m < 1:
            raise PreconditionViolatedError(f"{self.kind.value} with n >= 1 needs m >= 1")
        if self.kind == MapKind.PHI and self.m < 1:
            raise PreconditionViolatedError("phi needs m >= 1")
        if self.kind in (MapKind.W, MapKind.G) and self.n < 1:
            raise PreconditionViolatedError(f"{self.kind.value} needs n >= 1")

    @property
    def label(self) -> str:
        if self.kind in (MapKind.PSI, MapKind.PHI):
            return f"{self.kind.value}[{self.m},{self.n}]"
        return f"{self.kind.value}[{self.n}]"


def _checked(z: ComplexLike) -> ComplexLike:
    """Coerce to complex (scalar or complex128 array) and reject NaN/inf."""
    if isinstance(z, np.ndarray):
        arr = z.astype(np.complex128, copy=False)
        if not np.all(np.isfinite(arr)):
            raise NonFiniteInputError("map input contains NaN or infinity")
        return arr
    value = complex(z)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonFiniteInputError(f"map input {value!r} is not finite")
    return value


def _require_index(name: str, value: int, minimum: int) -> None:
    if int(value) != value or value < minimum:
        raise PreconditionViolatedError(f"{name} must be an integer >= {minimum}, got {value}")


def h_local(n: int, z: ComplexLike) -> ComplexLike:
    """
    Unchecked h_n kernel used by the iteration loops.

    (z + 2nπ)cos z − 2nπ rewritten as z cos z − 4nπ sin²(z/2), which avoids the
    cancellation of the 2nπ terms near z = 0.
    """
    s = np.sin(0.5 * z)
    return z * np.cos(z) - (2.0 * n * TWO_PI) * (s * s)


def h_lambda_local(n: int, z: ComplexLike, lam: complex) -> ComplexLike:
    """Unchecked local map T^{-(n+1)} ∘ f_λ ∘ T^n; identical to h_local when λ = 0."""
    if lam == 0:
        return h_local(n, z)
    return h_local(n, z) + lam * np.sin(z)


def q_local(z: ComplexLike) -> ComplexLike:
    """Unchecked q(z) = z − πz²."""
    return z - math.pi * (z * z)


def q_lambda_local(z: ComplexLike, coefficient: complex) -> ComplexLike:
    """Unchecked q_λ(z) = (1+λ)z − πz², given the coefficient 1+λ."""
    if coefficient == 1:
        return q_local(z)
    return coefficient * z - math.pi * (z * z)


def eval_f(z: ComplexLike) -> ComplexLike:
    """Evaluate f(z) = z cos z + 2π."""
    z = _checked(z)
    return z * np.cos(z) + TWO_PI


def eval_f_lambda(z: ComplexLike, p: FamilyParam) -> ComplexLike:
    """Evaluate f_λ(z) = z cos z + λ sin z + 2π (exactly eval_f when λ = 0)."""
    if p.is_base:
        return eval_f(z)
    z = _checked(z)
    return z * np.cos(z) + p.lam * np.sin(z) + TWO_PI


def eval_T(z: ComplexLike, k: int = 1) -> ComplexLike:
    """Apply T^k, the translation by 2kπ (k may be negative)."""
    return _checked(z) + k * TWO_PI


def eval_h(n: int, z: ComplexLike) -> ComplexLike:
    """Evaluate h_n(z) = T^{-(n+1)} ∘ f ∘ T^n(z) = (z + 2nπ)cos z − 2nπ."""
    _require_index("n", n, 0)
    return h_local(n, _checked(z))


def eval_h_lambda(n: int, z: ComplexLike, p: FamilyParam) -> ComplexLike:
    """Evaluate T^{-(n+1)} ∘ f_λ ∘ T^n(z) = h_n(z) + λ sin z."""
    _require_index("n", n, 0)
    return h_lambda_local(n, _checked(z), p.lam)


def h_series(n: int, z: ComplexLike, terms: int = 8) -> ComplexLike:
    """
    Truncated cosine power series of h_n.

    Sums (-1)^k (z^(2k+1)/(2k)! - 2nπ z^(2k+2)/(2k+2)!) for k < terms.
    Used only for small-|z| asymptotics; eval_h is authoritative.
    """
    _require_index("n", n, 0)
    z = _checked(z)
    total = 0 * z
    for k in range(terms):
        sign = -1.0 if k % 2 else 1.0
        total = total + sign * (
            z ** (2 * k + 1) / math.factorial(2 * k)
            - n * TWO_PI * z ** (2 * k + 2) / math.factorial(2 * k + 2)
        )
    return total


def eval_w(n: int, t: ComplexLike) -> ComplexLike:
    """
    Evaluate w_n(t) = 1 / h_n(1/t).

    Raises:
        DegenerateInputError: If t = 0 or h_n(1/t) = 0.
    """
    _require_index("n", n, 1)
    t = _checked(t)
    if np.any(t == 0):
        raise DegenerateInputError(f"w_{n} is undefined at t = 0")
    denominator = h_local(n, 1 / t)
    if np.any(denominator == 0):
        raise DegenerateInputError(f"w_{n} has a pole: h_{n}(1/t) = 0")
    return 1 / denominator


def eval_g(n: int, z: ComplexLike) -> ComplexLike:
    """Evaluate the scaled map g_n(z) = (n+1) h_n(z/n)."""
    _require_index("n", n, 1)
    z = _checked(z)
    return (n + 1) * h_local(n, z / n)


def eval_g_lambda(n: int, z: ComplexLike, p: FamilyParam) -> ComplexLike:
    """Evaluate g_{λ,n}(z) = (n+1) T^{-(n+1)} ∘ f_λ ∘ T^n(z/n)."""
    _require_index("n", n, 1)
    z = _checked(z)
    return (n + 1) * h_lambda_local(n, z / n, p.lam)


def compose_psi(m: int, n: int, z: ComplexLike) -> ComplexLike:
    """Evaluate ψ_{m,n} = h_{m+n-1} ∘ ... ∘ h_m (the identity when n = 0)."""
    _require_index("m", m, 0)
    _require_index("n", n, 0)
    w = _checked(z)
    for k in range(m, m + n):
        w = h_local(k, w)
    return w


def compose_phi(m: int, n: int, z: ComplexLike) -> ComplexLike:
    """Evaluate φ_{m,n}(z) = (m+n) ψ_{m,n}(z/m) = g_{m+n-1} ∘ ... ∘ g_m(z)."""
    _require_index("m", m, 1)
    _require_index("n", n, 0)
    z = _checked(z)
    if n == 0:
        return z
    return (m + n) * compose_psi(m, n, z / m)


def eval_q(z: ComplexLike) -> ComplexLike:
    """Evaluate the limiting quadratic q(z) = z − πz²."""
    return q_local(_checked(z))


def eval_q_lambda(z: ComplexLike, p: FamilyParam) -> ComplexLike:
    """Evaluate q_λ(z) = (1+λ)z − πz² (exactly eval_q when λ = 0)."""
    return q_lambda_local(_checked(z), p.linear_coefficient)


def iterate_q(z: ComplexLike, n: int) -> ComplexLike:
    """Evaluate q^n(z)."""
    _require_index("n", n, 0)
    w = _checked(z)
    for _ in range(n):
        w = q_local(w)
    return w


def iterate_q_lambda(z: ComplexLike, n: int, p: FamilyParam) -> ComplexLike:
    """Evaluate q_λ^n(z)."""
    _require_index("n", n, 0)
    w = _checked(z)
    coefficient = p.linear_coefficient
    for _ in range(n):
        w = q_lambda_local(w, coefficient)
    return w


def mandelbrot_param(p: FamilyParam) -> complex:
    """Parameter c of z² + c conjugate to q_λ: c = (1+λ)/2 − (1+λ)²/4."""
    a = p.linear_coefficient
    return a / 2 - a * a / 4


def evaluate(map_id: IndexedMapId, z: ComplexLike) -> ComplexLike:
    """Evaluate the map named by map_id at z."""
    logger.debug(f"Evaluating {map_id.label}")
    if map_id.kind == MapKind.H:
        return eval_h(map_id.n, z)
    if map_id.kind == MapKind.W:
        return eval_w(map_id.n, z)
    if map_id.kind == MapKind.G:
        return eval_g(map_id.n, z)
    if map_id.kind == MapKind.PSI:
        return compose_psi(map_id.m, map_id.n, z)
    return compose_phi(map_id.m, map_id.n, z)
