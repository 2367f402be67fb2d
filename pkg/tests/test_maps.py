"""Tests for the core maps module."""

import cmath
import math

import numpy as np
import pytest

from dynamics.maps import (
    TWO_PI,
    FamilyParam,
    IndexedMapId,
    MapKind,
    compose_phi,
    compose_psi,
    eval_f,
    eval_f_lambda,
    eval_g,
    eval_g_lambda,
    eval_h,
    eval_h_lambda,
    eval_q,
    eval_q_lambda,
    eval_T,
    eval_w,
    evaluate,
    h_series,
    iterate_q,
    mandelbrot_param,
)
from errors import DegenerateInputError, NonFiniteInputError, PreconditionViolatedError


def direct_local(m: int, n: int, z: complex) -> complex:
    """T^{-(m+n)} ∘ fⁿ ∘ Tᵐ(z) by plain iteration of f."""
    w = complex(z) + m * TWO_PI
    for _ in range(n):
        w = complex(eval_f(w))
    return w - (m + n) * TWO_PI


@pytest.fixture
def disc_samples():
    rng = np.random.default_rng(7)
    radius = rng.uniform(0, 0.1, 64)
    angle = rng.uniform(0, 2 * math.pi, 64)
    return radius * np.exp(1j * angle)


class TestEntireMap:
    """Tests for f and f_λ."""

    def test_f_at_zero(self):
        """f(0) = 2π."""
        assert eval_f(0) == TWO_PI

    def test_f_fixed_points(self):
        """π and 4π/3 are fixed by f."""
        assert abs(eval_f(math.pi) - math.pi) < 1e-12
        assert abs(eval_f(4 * math.pi / 3) - 4 * math.pi / 3) < 1e-12

    def test_conjugation_symmetry(self, disc_samples):
        """f(z̄) equals the conjugate of f(z)."""
        z = disc_samples * 40 + 3.0
        lhs = eval_f(np.conj(z))
        rhs = np.conj(eval_f(z))
        assert np.all(np.abs(lhs - rhs) <= 1e-12 * np.maximum(1, np.abs(rhs)))

    def test_lambda_zero_is_bit_identical(self, disc_samples):
        """λ = 0 takes the same evaluation path as f."""
        z = disc_samples + 7.0
        assert np.array_equal(eval_f_lambda(z, FamilyParam(0)), eval_f(z))

    def test_lambda_at_half_pi(self):
        """f_λ(π/2) = λ + 2π."""
        lam = 0.3 - 0.2j
        assert abs(eval_f_lambda(math.pi / 2, FamilyParam(lam)) - (lam + TWO_PI)) < 1e-12

    def test_lambda_at_zero(self):
        """f_λ(0) = 2π for every λ."""
        for lam in (1 / 3, -1, 2j):
            assert eval_f_lambda(0, FamilyParam(lam)) == TWO_PI

    def test_rejects_nan(self):
        """NaN input is rejected."""
        with pytest.raises(NonFiniteInputError):
            eval_f(float("nan"))
        with pytest.raises(NonFiniteInputError):
            eval_f(np.array([1.0, np.inf]))


class TestTranslation:
    """Tests for T^k."""

    def test_forward(self):
        assert eval_T(0, 1) == TWO_PI

    def test_inverse(self):
        """T^{-1}(2π) = 0."""
        assert eval_T(TWO_PI, -1) == 0

    def test_identity(self):
        assert eval_T(1.5 + 2j, 0) == 1.5 + 2j


class TestLocalMaps:
    """Tests for h_n, w_n and g_n."""

    def test_h_fixes_zero(self):
        """h_n(0) = 0 for every n."""
        for n in (0, 1, 5, 200):
            assert eval_h(n, 0) == 0

    def test_h_matches_conjugated_f(self):
        """h_5(0.01) agrees with T⁻⁶ ∘ f ∘ T⁵(0.01)."""
        expected = direct_local(5, 1, 0.01)
        assert abs(eval_h(5, 0.01) - expected) <= 1e-10 * abs(expected)

    def test_h1_leading_terms(self, disc_samples):
        """h_1(z) = z − πz² + O(z³) on |z| ≤ 0.1."""
        z = disc_samples
        error = np.abs(eval_h(1, z) - (z - math.pi * z * z))
        assert np.all(error <= 1.0 * np.abs(z) ** 3 + 1e-15)

    def test_series_matches_closed_form(self):
        """The truncated series agrees with the closed form for small z."""
        for z in (0.05, 0.03 - 0.04j):
            assert abs(h_series(3, z) - eval_h(3, z)) < 1e-13

    def test_h_lambda_zero(self, disc_samples):
        """h_{λ,n} with λ = 0 is h_n."""
        assert np.array_equal(eval_h_lambda(4, disc_samples, FamilyParam(0)), eval_h(4, disc_samples))

    def test_w_in_drift_band(self):
        """w_1(10π) − 10π lies between (2/3)π and (11/8)π."""
        t = 10 * math.pi
        value = eval_w(1, t)
        assert abs(value.imag) < 1e-12
        assert t + (2 / 3) * math.pi < value.real < t + (11 / 8) * math.pi

    def test_w_lower_drift(self):
        """Re w_5(16π) > 16π + (2/3)·5π."""
        t = 16 * math.pi
        assert eval_w(5, t).real > t + (2 / 3) * 5 * math.pi

    def test_w_inverts_through_h(self):
        """w_n(1/z) = 1/h_n(z)."""
        z = 0.004 + 0.001j
        assert abs(eval_w(7, 1 / z) - 1 / eval_h(7, z)) < 1e-9 * abs(1 / eval_h(7, z))

    def test_w_pole(self):
        """w_n is undefined at t = 0."""
        with pytest.raises(DegenerateInputError):
            eval_w(3, 0)

    def test_g_at_zero(self):
        assert eval_g(10, 0) == 0

    def test_g1_definition(self):
        """g_1(1) = 2·h_1(1)."""
        assert eval_g(1, 1) == pytest.approx(2 * eval_h(1, 1), rel=1e-15)

    def test_g_lambda_zero(self, disc_samples):
        """g_{λ,n} with λ = 0 is g_n bit for bit."""
        assert np.array_equal(eval_g_lambda(12, disc_samples, FamilyParam(0)), eval_g(12, disc_samples))

    def test_index_validation(self):
        """Negative indices are rejected."""
        with pytest.raises(PreconditionViolatedError):
            eval_h(-1, 0.1)
        with pytest.raises(PreconditionViolatedError):
            eval_g(0, 0.1)


class TestCompositions:
    """Tests for ψ_{m,n} and φ_{m,n}."""

    def test_psi_empty_composition(self):
        assert compose_psi(5, 0, 0.02 + 0.01j) == 0.02 + 0.01j

    def test_psi_single_factor(self):
        """ψ_{5,1} = h_5."""
        z = 0.01 - 0.003j
        assert compose_psi(5, 1, z) == eval_h(5, z)

    def test_psi_matches_direct_iteration(self):
        """ψ_{5,3}(0.01) agrees with T⁻⁸(f³(T⁵(0.01)))."""
        expected = direct_local(5, 3, 0.01)
        result = compose_psi(5, 3, 0.01)
        assert abs(result - expected) <= 1e-9 * max(1.0, abs(result))

    def test_psi_matches_direct_on_random_triples(self):
        """Composition identity over random m, n and z in D_m."""
        rng = np.random.default_rng(3)
        for _ in range(50):
            m = int(rng.integers(1, 51))
            n = int(rng.integers(0, 21))
            r = 1 / (6 * m * math.pi)
            z = r + r * rng.uniform(0, 0.99) * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            result = compose_psi(m, n, z)
            assert abs(result - direct_local(m, n, z)) <= 1e-9 * max(1.0, abs(result))

    def test_phi_empty_composition(self):
        assert compose_phi(3, 0, 0.4) == 0.4

    def test_phi_single_factor(self):
        """φ_{m,1} = g_m."""
        assert compose_phi(8, 1, 0.3 + 0.1j) == pytest.approx(eval_g(8, 0.3 + 0.1j), rel=1e-15)

    def test_phi_approaches_q_iterate(self):
        """|φ_{m,5}(0.3) − q⁵(0.3)| shrinks as m grows."""
        target = iterate_q(0.3, 5)
        errors = [abs(compose_phi(m, 5, 0.3) - target) for m in (20, 80, 400)]
        assert errors[0] > errors[1] > errors[2]


class TestQuadratic:
    """Tests for q, q_λ and the Mandelbrot parameter."""

    def test_q_fixes_zero(self):
        assert eval_q(0) == 0

    def test_q_value(self):
        """q(1/(2π)) = 1/(4π)."""
        assert abs(eval_q(1 / (2 * math.pi)) - 1 / (4 * math.pi)) < 1e-15

    def test_q_lambda_zero(self, disc_samples):
        assert np.array_equal(eval_q_lambda(disc_samples, FamilyParam(0)), eval_q(disc_samples))

    def test_iterate_q(self):
        z = 0.2 + 0.05j
        assert iterate_q(z, 3) == eval_q(eval_q(eval_q(z)))

    def test_mandelbrot_base(self):
        """c(0) = 1/4 exactly."""
        assert mandelbrot_param(FamilyParam(0)) == 0.25

    def test_mandelbrot_minus_one(self):
        assert mandelbrot_param(FamilyParam(-1)) == 0

    def test_mandelbrot_irrational_rotation(self):
        """λ = e^{2√2πi} − 1 gives c ≈ −0.547 + 0.477i."""
        lam = cmath.exp(2j * math.sqrt(2) * math.pi) - 1
        assert abs(mandelbrot_param(FamilyParam(lam)) - (-0.547 + 0.477j)) < 5e-3


class TestIndexedMapId:
    """Tests for map identifiers and dispatch."""

    def test_phi_needs_positive_m(self):
        with pytest.raises(PreconditionViolatedError):
            IndexedMapId(MapKind.PHI, m=0, n=2)

    def test_label(self):
        assert IndexedMapId(MapKind.PSI, m=5, n=3).label == "psi[5,3]"
        assert IndexedMapId(MapKind.H, n=4).label == "h[4]"

    def test_evaluate_dispatch(self):
        """evaluate() routes each kind to its map."""
        z = 0.01 + 0.002j
        assert evaluate(IndexedMapId(MapKind.H, n=6), z) == eval_h(6, z)
        assert evaluate(IndexedMapId(MapKind.G, n=6), z) == eval_g(6, z)
        assert evaluate(IndexedMapId(MapKind.W, n=6), 1 / z) == eval_w(6, 1 / z)
        assert evaluate(IndexedMapId(MapKind.PSI, m=6, n=2), z) == compose_psi(6, 2, z)
        assert evaluate(IndexedMapId(MapKind.PHI, m=6, n=2), z) == compose_phi(6, 2, z)
