"""Selberg constants against integral oracles; freezing asymptotics."""

import math

import numpy as np
import pytest
from scipy import integrate

from jacobi_freeze.freeze import freeze_point
from jacobi_freeze.normalization import (
    log_fluctuation_prefactor,
    log_fluctuation_prefactor_limit,
    log_selberg_constant,
    normalization_report,
)
from jacobi_freeze.params import EnsembleParams
from jacobi_freeze.spectral import determinant_algebraic

AB_GRID = [(0.0, 1.0), (1.0, 1.0), (2.0, 0.5), (0.5, 3.0)]


class TestSelbergConstant:
    @pytest.mark.parametrize("a,b", AB_GRID)
    @pytest.mark.parametrize("kappa", [1.0, 7.5, 100.0])
    def test_dimension_one_beta_oracle(self, a, b, kappa):
        # 1/c = 2^(kappa(a+2b)/2) B(kappa(a+b)/2+1/2, kappa*b/2+1/2)
        p = 0.5 * kappa * (a + b) + 0.5
        q = 0.5 * kappa * b + 0.5
        log_beta = math.lgamma(p) + math.lgamma(q) - math.lgamma(p + q)
        oracle = -(0.5 * kappa * (a + 2.0 * b) * math.log(2.0) + log_beta)
        got = log_selberg_constant(EnsembleParams(1, a, b, kappa))
        assert abs(got - oracle) <= 1e-10

    @pytest.mark.parametrize("a,b", [(1.0, 1.0), (2.0, 0.5)])
    def test_dimension_one_quadrature(self, a, b):
        kappa = 3.0
        params = EnsembleParams(1, a, b, kappa)

        def integrand(x):
            return (1.0 - x) ** (0.5 * kappa * (a + b) - 0.5) * (1.0 + x) ** (
                0.5 * kappa * b - 0.5
            )

        value, _ = integrate.quad(integrand, -1.0, 1.0)
        assert value == pytest.approx(math.exp(-log_selberg_constant(params)), rel=1e-10)

    def test_dimension_two_quadrature(self):
        kappa, a, b = 2.0, 0.0, 1.0
        params = EnsembleParams(2, a, b, kappa)
        e_minus = 0.5 * kappa * (a + b) - 0.5
        e_plus = 0.5 * kappa * b - 0.5

        def integrand(x2, x1):
            return (
                (x2 - x1) ** kappa
                * ((1.0 - x1) * (1.0 - x2)) ** e_minus
                * ((1.0 + x1) * (1.0 + x2)) ** e_plus
            )

        value, _ = integrate.dblquad(
            integrand, -1.0, 1.0, lambda x1: x1, lambda _: 1.0, epsabs=0.0, epsrel=1e-10
        )
        assert value == pytest.approx(math.exp(-log_selberg_constant(params)), rel=1e-6)

    def test_finite_at_kappa_one(self):
        for (a, b) in AB_GRID:
            assert math.isfinite(log_selberg_constant(EnsembleParams(8, a, b, 1.0)))


class TestPrefactor:
    @pytest.mark.parametrize("n,a,b", [(1, 1.0, 1.0), (3, 1.0, 1.0), (8, 0.5, 3.0)])
    def test_convergence_monotone(self, n, a, b):
        fp = freeze_point(EnsembleParams(n, a, b))
        limit = log_fluctuation_prefactor_limit(fp.params)
        gaps = [
            abs(log_fluctuation_prefactor(EnsembleParams(n, a, b, kappa), fp) - limit)
            for kappa in (1e2, 1e3, 1e4, 1e5)
        ]
        assert all(x > y for x, y in zip(gaps, gaps[1:]))

    def test_stirling_error_at_large_kappa(self):
        # measured 1.8e-5 at kappa=1e4; frozen allowance 1e-3
        params = EnsembleParams(1, 1.0, 1.0, 1e4)
        fp = freeze_point(params)
        gap = abs(
            log_fluctuation_prefactor(params, fp) - log_fluctuation_prefactor_limit(params)
        )
        assert gap < 1e-3

    def test_limit_value_dimension_one(self):
        # sqrt(1!)/(2^2 sqrt(pi)) * 3^(3/2)/sqrt(2*1) = 3 sqrt(3) / (4 sqrt(2 pi))
        got = log_fluctuation_prefactor_limit(EnsembleParams(1, 1.0, 1.0))
        expected = math.log(3.0 * math.sqrt(3.0) / (4.0 * math.sqrt(2.0 * math.pi)))
        assert got == pytest.approx(expected, abs=1e-14)

    @pytest.mark.parametrize("n", [1, 2, 5, 16, 64])
    @pytest.mark.parametrize("a,b", AB_GRID)
    def test_gaussian_normalizer_identity(self, n, a, b):
        params = EnsembleParams(n, a, b)
        fp = freeze_point(params)
        _, logdet = determinant_algebraic(params, fp)
        gaussian = 0.5 * logdet - 0.5 * n * math.log(2.0 * math.pi)
        assert abs(log_fluctuation_prefactor_limit(params) - gaussian) <= 1e-10

    def test_report_fields_finite(self):
        report = normalization_report(EnsembleParams(4, 0.5, 3.0, 250.0))
        assert math.isfinite(report.log_selberg)
        assert math.isfinite(report.log_prefactor)
        assert math.isfinite(report.log_prefactor_limit)

    def test_limit_positive_finite_on_grid(self):
        for n in (1, 2, 3, 5, 8, 16, 32, 64):
            for (a, b) in AB_GRID:
                value = log_fluctuation_prefactor_limit(EnsembleParams(n, a, b))
                assert math.isfinite(value)
