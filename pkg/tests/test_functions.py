"""Base function families against independent oracles (direct truncated sums
computed in this file, plus scipy as a second implementation)."""

import math

import pytest
import scipy.special as sc
from hypothesis import given, settings
from hypothesis import strategies as st

from besselsums import SummationPolicy, bessel_j, hermite_m, laguerre2, tricomi_c, wright

# frozen from 30-term direct sums
J0_1 = 0.7651976865579666
J1_1 = 0.44005058574493355
I0_2 = 2.2795853023360673  # wright(1, 1, 1)


def bessel_series_oracle(nu, x, terms=30):
    """Direct truncated sum, independent of the package internals."""
    total = 0.0
    for k in range(terms):
        g = sc.rgamma(nu + k + 1)
        total += (-1) ** k * (x / 2.0) ** (2 * k + nu) * g / math.factorial(k)
    return total


class TestBesselJ:
    def test_at_origin(self):
        assert bessel_j(0, 0.0).value == 1.0
        assert bessel_j(1, 0.0).value == 0.0
        assert bessel_j(3, 0.0).value == 0.0

    def test_j0_of_one(self):
        ev = bessel_j(0, 1.0)
        assert ev.converged
        assert ev.value == pytest.approx(J0_1, rel=1e-14)

    def test_derived_oracle_grid(self):
        for nu in (0.0, 0.5, 1.0, 2.5, -0.5):
            for x in (0.5, 1.0, 3.0, 7.0):
                assert bessel_j(nu, x).value == pytest.approx(
                    bessel_series_oracle(nu, x, 60), rel=1e-12, abs=1e-14
                )

    def test_against_scipy(self):
        for nu in (-2.0, -0.5, 0.0, 1.0, 4.5):
            for x in (0.3, 2.0, 6.0):
                assert bessel_j(nu, x).value == pytest.approx(float(sc.jv(nu, x)), rel=1e-11)

    def test_negative_integer_parity_example(self):
        assert bessel_j(-2, 1.3).value == pytest.approx(bessel_j(2, 1.3).value, rel=1e-15)

    @settings(max_examples=60)
    @given(
        st.integers(min_value=0, max_value=8),
        st.sampled_from([0.5, 1.0, 5.0]),
    )
    def test_parity_property(self, n, x):
        left = bessel_j(-n, x).value
        right = (-1) ** n * bessel_j(n, x).value
        assert left == pytest.approx(right, rel=1e-12, abs=1e-15)

    def test_negative_x_integer_order(self):
        # J_n(-x) = (-1)^n J_n(x)
        assert bessel_j(3, -2.0).value == pytest.approx(-bessel_j(3, 2.0).value, rel=1e-14)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            bessel_j(0.5, -1.0)
        with pytest.raises(ValueError):
            bessel_j(-0.5, 0.0)
        with pytest.raises(ValueError):
            bessel_j(math.inf, 1.0)

    def test_negative_integer_order_at_zero(self):
        assert bessel_j(-3, 0.0).value == 0.0


class TestTricomi:
    def test_at_origin(self):
        assert tricomi_c(0.0, 0.0).value == 1.0

    def test_k0_term_only(self):
        for alpha in (0.5, 2.0, 3.25):
            assert tricomi_c(alpha, 0.0).value == pytest.approx(
                float(sc.rgamma(alpha + 1)), rel=1e-14
            )

    def test_bessel_relation(self):
        # C_alpha(x) = x^(-alpha/2) J_alpha(2 sqrt x)
        assert tricomi_c(1.0, 0.25).value == pytest.approx(2.0 * J1_1, rel=1e-13)
        for alpha in (0.0, 0.5, 1.0, 2.0):
            for x in (0.25, 1.0, 4.0):
                expected = x ** (-alpha / 2.0) * bessel_j(alpha, 2.0 * math.sqrt(x)).value
                assert tricomi_c(alpha, x).value == pytest.approx(expected, rel=1e-11)

    def test_negative_argument(self):
        # C_0(-x) = I-type series, all terms positive
        oracle = sum(1.0**k / math.factorial(k) ** 2 for k in range(30))
        assert tricomi_c(0.0, -1.0).value == pytest.approx(oracle, rel=1e-14)

    def test_negative_integer_order(self):
        # C_{-n}(x): first n terms vanish at gamma poles
        oracle = sum(
            (-2.0) ** k / math.factorial(k) * float(sc.rgamma(-2 + k + 1)) for k in range(40)
        )
        assert tricomi_c(-2.0, 2.0).value == pytest.approx(oracle, rel=1e-13)


class TestLaguerre2:
    def test_x_zero(self):
        for n in (0, 1, 4):
            assert laguerre2(n, 0.0, 1.7) == pytest.approx(1.7**n, rel=1e-15)

    def test_hand_expanded(self):
        # n=2: y^2 - 2xy + x^2/2 at (1, 1)
        assert laguerre2(2, 1.0, 1.0) == -0.5

    def test_reduces_to_ordinary_laguerre(self):
        for x in (0.3, 1.7, 4.0):
            assert laguerre2(3, x, 1.0) == pytest.approx(float(sc.eval_laguerre(3, x)), rel=1e-12)

    def test_homogeneity(self):
        # L_n(x, y) = y^n L_n(x/y)
        x, y, n = 0.8, 1.3, 5
        assert laguerre2(n, x, y) == pytest.approx(
            y**n * float(sc.eval_laguerre(n, x / y)), rel=1e-12
        )

    def test_bad_degree(self):
        with pytest.raises(ValueError):
            laguerre2(-1, 1.0, 1.0)


class TestHermiteM:
    def test_y_zero(self):
        for n in (0, 1, 5):
            assert hermite_m(n, 2, 1.5, 0.0) == pytest.approx(1.5**n, rel=1e-15)

    def test_hand_expanded(self):
        # n=2, m=2: x^2 + 2y at (1, 1)
        assert hermite_m(2, 2, 1.0, 1.0) == 3.0

    def test_classical_hermite(self):
        # H_n(x) (physicists') = hermite_m(n, 2, 2x, -1)
        for n in (0, 1, 2, 3, 4):
            for x in (0.3, 1.1):
                assert hermite_m(n, 2, 2 * x, -1.0) == pytest.approx(
                    float(sc.eval_hermite(n, x)), rel=1e-12
                )

    @settings(max_examples=80)
    @given(
        st.integers(min_value=0, max_value=12),
        st.integers(min_value=1, max_value=3),
        st.sampled_from([0.25, 0.5, 1.0, 2.0]),
        st.sampled_from([0.25, 1.0, 1.5]),
    )
    def test_parity_exact(self, n, m, x, y):
        # H_n(-x, y) == (-1)^n H_n(x, (-1)^m y), exactly in floating point
        assert hermite_m(n, m, -x, y) == (-1) ** n * hermite_m(n, m, x, (-1) ** m * y)

    @pytest.mark.parametrize("m", [2, 3])
    @pytest.mark.parametrize("x", [-1.0, 1.0])
    @pytest.mark.parametrize("y", [-1.0, 1.0])
    @pytest.mark.parametrize("t", [0.3, 0.7])
    def test_generating_function(self, m, x, y, t):
        total = sum(t**n / math.factorial(n) * hermite_m(n, m, x, y) for n in range(40))
        assert total == pytest.approx(math.exp(x * t + y * t**m), rel=1e-10)

    def test_bad_order(self):
        with pytest.raises(ValueError):
            hermite_m(2, 0, 1.0, 1.0)


class TestWright:
    def test_at_zero(self):
        for nu in (0.5, 1.0, 2.5):
            assert wright(nu, 1.0, 0.0).value == pytest.approx(float(sc.rgamma(nu)), rel=1e-14)

    def test_i0_relation(self):
        assert wright(1.0, 1.0, 1.0).value == pytest.approx(I0_2, rel=1e-14)

    def test_matches_tricomi_series(self):
        # W_1(x | 1) = sum x^r/(r! Gamma(1+r)) = C_0(-x)
        for x in (0.3, 1.0, 2.5):
            assert wright(1.0, 1.0, x).value == pytest.approx(
                tricomi_c(0.0, -x).value, rel=1e-13
            )

    def test_pole_weights_skipped(self):
        # nu a negative integer with mu=1: leading gamma poles kill terms r <= -nu
        oracle = sum(
            0.7**r / math.factorial(r) * float(sc.rgamma(-3.0 + r)) for r in range(40)
        )
        assert wright(-3.0, 1.0, 0.7).value == pytest.approx(oracle, rel=1e-12)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            wright(1.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            wright(1.0, -0.5, 1.0)

    def test_tight_policy_still_converges(self):
        ev = wright(0.5, 0.5, 2.0, SummationPolicy(abs_tol=1e-15, rel_tol=1e-13))
        assert ev.converged
