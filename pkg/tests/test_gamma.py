"""Reciprocal gamma and the exact combinatorial primitives."""

import math

import pytest
import scipy.special as sc
from hypothesis import given
from hypothesis import strategies as st

from besselsums import (
    EXACTNESS_BOUND,
    binomial,
    falling_factorial,
    gamma_moment,
    reciprocal_gamma,
    stirling2,
)


class TestReciprocalGamma:
    def test_at_one(self):
        assert reciprocal_gamma(1.0) == 1.0

    def test_pole_at_zero(self):
        assert reciprocal_gamma(0.0) == 0.0

    def test_half(self):
        # Gamma(1/2) = sqrt(pi)
        assert reciprocal_gamma(0.5) == pytest.approx(1.0 / math.sqrt(math.pi), rel=1e-15)

    @pytest.mark.parametrize("n", range(0, 51))
    def test_poles_exact_zero(self, n):
        assert reciprocal_gamma(-float(n)) == 0.0

    @pytest.mark.parametrize("n", range(1, 21))
    def test_factorial_consistency(self, n):
        # 1/Gamma(n) * (n-1)! == 1 to within a couple of ulps
        prod = reciprocal_gamma(float(n)) * float(math.factorial(n - 1))
        assert abs(prod - 1.0) <= 4 * math.ulp(1.0)

    def test_against_scipy_grid(self):
        # relative error <= 1e-13 on [-30, 30], at least 0.05 away from poles
        a = -30.0 + 0.0625
        while a < 30.0:
            if abs(a - round(a)) > 0.05 or a > 0.5:
                assert reciprocal_gamma(a) == pytest.approx(
                    float(sc.rgamma(a)), rel=1e-13, abs=1e-300
                ), f"mismatch at a={a}"
            a += 0.125

    def test_near_pole_sign(self):
        assert reciprocal_gamma(-0.5) == pytest.approx(-0.28209479177387814, rel=1e-13)
        assert reciprocal_gamma(-1.5) == pytest.approx(0.42314218766081724, rel=1e-13)

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            reciprocal_gamma(math.inf)
        with pytest.raises(ValueError):
            reciprocal_gamma(math.nan)


class TestGammaMoment:
    def test_at_zero(self):
        assert gamma_moment(0.0).value == 1.0

    def test_negative_integer_vanishes(self):
        assert gamma_moment(-1.0).value == 0.0

    def test_at_three(self):
        # 1/Gamma(4) = 1/3!
        assert gamma_moment(3.0).value == pytest.approx(1.0 / 6.0, rel=1e-15)

    def test_carries_order(self):
        m = gamma_moment(2.5)
        assert m.alpha == 2.5
        assert m.value == reciprocal_gamma(3.5)


def _partitions_into_blocks(m, k):
    """Brute-force count of set partitions of {0..m-1} into k nonempty blocks."""
    if m == 0:
        return 1 if k == 0 else 0
    count = 0

    def extend(element, blocks):
        nonlocal count
        if element == m:
            if len(blocks) == k:
                count += 1
            return
        for b in blocks:
            b.append(element)
            extend(element + 1, blocks)
            b.pop()
        if len(blocks) < k:
            blocks.append([element])
            extend(element + 1, blocks)
            blocks.pop()

    extend(0, [])
    return count


class TestStirling2:
    def test_base_cases(self):
        assert stirling2(0, 0) == 1
        assert stirling2(1, 1) == 1
        assert stirling2(4, 0) == 0
        assert stirling2(2, 3) == 0

    @pytest.mark.parametrize("m,k", [(3, 2), (4, 2), (5, 3), (6, 3)])
    def test_against_enumeration(self, m, k):
        assert stirling2(m, k) == _partitions_into_blocks(m, k)

    def test_recurrence_exact(self):
        for m in range(1, 31):
            for k in range(1, m + 1):
                assert stirling2(m, k) == k * stirling2(m - 1, k) + stirling2(m - 1, k - 1)

    def test_bound_enforced(self):
        with pytest.raises(ValueError):
            stirling2(EXACTNESS_BOUND + 1, 2)
        with pytest.raises(ValueError):
            stirling2(-1, 0)


class TestBinomial:
    def test_pascal_recurrence(self):
        # independent oracle: Pascal triangle built in the test
        row = [1]
        for n in range(1, 11):
            row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
            for k, expected in enumerate(row):
                assert binomial(n, k) == expected

    def test_edges(self):
        assert binomial(5, 2) == 10
        assert binomial(7, 0) == 1
        assert binomial(3, 4) == 0

    def test_bound_enforced(self):
        with pytest.raises(ValueError):
            binomial(EXACTNESS_BOUND + 1, 1)


class TestFallingFactorial:
    def test_values(self):
        assert falling_factorial(4.0, 2) == 12.0
        assert falling_factorial(2.5, 0) == 1.0
        assert falling_factorial(2.0, 3) == 0.0

    @given(st.integers(min_value=0, max_value=10), st.integers(min_value=1, max_value=10))
    def test_power_identity(self, a, m):
        # sum_k S2(m,k) a^(k) = a^m, exactly in integer arithmetic
        total = sum(stirling2(m, k) * int(falling_factorial(float(a), k)) for k in range(1, m + 1))
        assert total == a**m
