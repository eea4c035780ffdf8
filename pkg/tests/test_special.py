"""Kernel tests: Jacobi evaluation, log-Pochhammer, log-gamma."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobi_freeze.special import (
    jacobi_deriv,
    jacobi_eval,
    jacobi_recurrence,
    log_gamma,
    log_pochhammer,
)

INDICES = st.floats(min_value=-0.95, max_value=5.0, allow_nan=False)
POINTS = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)


def binom_real(top: float, k: int) -> float:
    return math.exp(math.lgamma(top + 1.0) - math.lgamma(top - k + 1.0) - math.lgamma(k + 1.0))


class TestJacobiEval:
    def test_degree_zero_is_one(self):
        assert jacobi_eval(0, 0.3, -0.2, 0.7) == 1.0

    def test_degree_one_closed_form(self):
        # ((alpha+beta+2)x + (alpha-beta))/2 at x=0, alpha=1, beta=0
        assert jacobi_eval(1, 1.0, 0.0, 0.0) == pytest.approx(0.5, abs=1e-15)

    @pytest.mark.parametrize("n,alpha,beta", [(2, 1.0, 0.0), (5, 0.5, 2.0), (10, 0.0, 0.0), (7, 2.5, -0.5)])
    def test_value_at_one_is_binomial(self, n, alpha, beta):
        expected = binom_real(n + alpha, n)
        assert jacobi_eval(n, alpha, beta, 1.0) == pytest.approx(expected, rel=1e-13)

    def test_spot_value_at_one(self):
        assert jacobi_eval(2, 1.0, 0.0, 1.0) == pytest.approx(3.0, abs=1e-14)

    def test_vectorized_matches_scalar(self):
        xs = np.linspace(-1, 1, 7)
        vec = jacobi_eval(6, 0.3, 1.7, xs)
        assert vec.shape == xs.shape
        for x, v in zip(xs, vec):
            assert jacobi_eval(6, 0.3, 1.7, float(x)) == pytest.approx(v, rel=1e-15)

    def test_matches_scipy(self):
        from scipy.special import eval_jacobi

        rng = np.random.default_rng(7)
        for _ in range(50):
            n = int(rng.integers(0, 25))
            alpha = float(rng.uniform(-0.9, 4.0))
            beta = float(rng.uniform(-0.9, 4.0))
            x = float(rng.uniform(-1.0, 1.0))
            ours = jacobi_eval(n, alpha, beta, x)
            ref = float(eval_jacobi(n, alpha, beta, x))
            assert ours == pytest.approx(ref, rel=1e-10, abs=1e-12)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=1, max_value=25), INDICES, INDICES, POINTS)
    def test_three_term_recurrence_residual(self, n, alpha, beta, x):
        # P_{n+1} = (A_n x + B_n) P_n - C_n P_{n-1}, valid for n >= 1.
        s = 2.0 * n + alpha + beta
        a_n = (s + 1.0) * (s + 2.0) / (2.0 * (n + 1.0) * (n + alpha + beta + 1.0))
        b_n = (
            (alpha**2 - beta**2)
            * (s + 1.0)
            / (2.0 * (n + 1.0) * (n + alpha + beta + 1.0) * s)
        )
        c_n = (
            (n + alpha)
            * (n + beta)
            * (s + 2.0)
            / ((n + 1.0) * (n + alpha + beta + 1.0) * s)
        )
        p_hi = jacobi_eval(n + 1, alpha, beta, x)
        p_mid = jacobi_eval(n, alpha, beta, x)
        p_lo = jacobi_eval(n - 1, alpha, beta, x)
        lhs = (a_n * x + b_n) * p_mid - c_n * p_lo
        scale = max(abs(p_hi), abs((a_n * x + b_n) * p_mid), abs(c_n * p_lo), 1.0)
        assert abs(p_hi - lhs) <= 1e-12 * scale

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=0, max_value=20), INDICES, INDICES, POINTS)
    def test_reflection_symmetry(self, n, alpha, beta, x):
        lhs = jacobi_eval(n, alpha, beta, -x)
        rhs = (-1.0) ** n * jacobi_eval(n, beta, alpha, x)
        scale = max(abs(lhs), abs(rhs), 1.0)
        assert abs(lhs - rhs) <= 1e-12 * scale

    def test_derivative_matches_finite_difference(self):
        h = 1e-6
        for (n, alpha, beta, x) in [(3, 0.5, 1.5, 0.2), (8, 0.0, 0.0, -0.6), (1, 2.0, -0.5, 0.9)]:
            fd = (jacobi_eval(n, alpha, beta, x + h) - jacobi_eval(n, alpha, beta, x - h)) / (2 * h)
            assert jacobi_deriv(n, alpha, beta, x) == pytest.approx(fd, rel=1e-7, abs=1e-7)

    def test_rejects_bad_indices(self):
        with pytest.raises(ValueError):
            jacobi_eval(3, -1.0, 0.0, 0.5)
        with pytest.raises(ValueError):
            jacobi_eval(3, 0.0, -1.2, 0.5)
        with pytest.raises(ValueError):
            jacobi_eval(-1, 0.0, 0.0, 0.5)


class TestLogPochhammer:
    def test_empty_product(self):
        assert log_pochhammer(2.7, 0) == 0.0

    def test_factorial(self):
        assert log_pochhammer(1.0, 4) == pytest.approx(math.log(24.0), rel=1e-15)

    def test_three_rising_two(self):
        assert log_pochhammer(3.0, 2) == pytest.approx(math.log(12.0), rel=1e-15)

    @settings(max_examples=100, deadline=None)
    @given(
        st.floats(min_value=1e-3, max_value=50.0, allow_nan=False),
        st.integers(min_value=0, max_value=60),
    )
    def test_gamma_ratio_identity(self, x, n):
        via_gamma = log_gamma(x + n) - log_gamma(x)
        direct = log_pochhammer(x, n)
        assert abs(direct - via_gamma) <= 1e-11 * max(1.0, abs(direct))

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            log_pochhammer(0.0, 3)
        with pytest.raises(ValueError):
            log_pochhammer(-1.0, 3)
        with pytest.raises(ValueError):
            log_pochhammer(1.0, -1)


class TestLogGamma:
    @pytest.mark.parametrize(
        "x,expected",
        [(1.0, 0.0), (0.5, math.log(math.sqrt(math.pi))), (6.0, math.log(120.0))],
    )
    def test_known_values(self, x, expected):
        assert log_gamma(x) == pytest.approx(expected, abs=1e-14)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            log_gamma(0.0)
        with pytest.raises(ValueError):
            log_gamma(-2.5)


class TestJacobiRecurrence:
    @pytest.mark.parametrize("alpha,beta", [(0.0, 0.0), (1.5, -0.5), (2.5, 2.0), (-0.5, -0.5)])
    def test_offdiagonal_positive(self, alpha, beta):
        rec = jacobi_recurrence(12, alpha, beta)
        assert np.all(rec.offdiag > 0.0)
        assert rec.diag.shape == (12,)
        assert rec.offdiag.shape == (11,)

    def test_degenerate_index_sum(self):
        # alpha + beta = -1 exercises the cancelled k=1 coupling.
        rec = jacobi_recurrence(6, -0.5, -0.5)
        assert np.all(np.isfinite(rec.diag))
        assert np.all(np.isfinite(rec.offdiag))

    def test_rejects_bad_degree(self):
        with pytest.raises(ValueError):
            jacobi_recurrence(0, 0.0, 0.0)
