"""Acceptance-grid verification: every identity of the theory checked
numerically at its frozen tolerance.

Each criterion function returns a list of Check records; `run_criteria`
drives them all.  The same runners back the command-line `verify-all` and
the acceptance test module, so there is exactly one source of truth for the
grid and the tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import math
import numpy as np

from . import calibration, normalization
from .freeze import (
    FreezePoint,
    freeze_point,
    log_objective_closed_form,
    log_objective_direct,
    log_products,
    stationarity_residual,
)
from .limits import (
    build_hermite_limit,
    build_laguerre_limit,
    hermite_convergence,
    laguerre_convergence,
    log_det_hermite_closed_form,
    log_det_laguerre_closed_form,
)
from .params import EnsembleParams
from .precision import (
    build_algebraic,
    build_trigonometric,
    cross_relation_residual,
    invert_to_covariance,
)
from .sampler import (
    SamplerConfig,
    batch_statistics,
    format_csv,
    lag_one_autocorrelation,
    sample_mcmc,
    to_trigonometric,
)
from .spectral import (
    build_discrete_op_basis,
    closed_form_spectrum,
    determinant_algebraic,
    determinant_trigonometric,
    symmetric_eigendecompose,
    verify_eigenvectors,
)

GRID_SIZES = (1, 2, 3, 5, 8, 16, 32, 64)
GRID_AB = ((0.0, 1.0), (1.0, 1.0), (2.0, 0.5), (0.5, 3.0))
GRID = tuple((n, a, b) for n in GRID_SIZES for (a, b) in GRID_AB)


@dataclass(frozen=True)
class Check:
    """One verified quantity; `expected` is the target (or a bound of 0 for
    residual-style checks), `tolerance` the frozen allowance."""

    name: str
    expected: float | str
    actual: float | str
    tolerance: float
    passed: bool


def check_close(name: str, actual: float, expected: float, tol: float) -> Check:
    return Check(name, expected, actual, tol, bool(abs(actual - expected) <= tol))


def check_bound(name: str, actual: float, bound: float) -> Check:
    return Check(name, 0.0, actual, bound, bool(actual <= bound))


def check_true(name: str, condition: bool, description: str = "holds") -> Check:
    return Check(name, description, description if condition else "violated", 0.0, bool(condition))


@lru_cache(maxsize=None)
def _freeze(n: int, a: float, b: float) -> FreezePoint:
    return freeze_point(EnsembleParams(n, a, b))


def _strictly_decreasing(values) -> bool:
    return all(x > y for x, y in zip(values, values[1:]))


# --- identity-based criteria (fast, full grid) ------------------------------


def criterion_stationarity() -> list[Check]:
    worst = max(
        float(np.max(np.abs(stationarity_residual(_freeze(n, a, b).zeros, _freeze(n, a, b).params))))
        for (n, a, b) in GRID
    )
    return [check_bound("max_stationarity_residual", worst, 1e-10)]


def criterion_discriminant() -> list[Check]:
    worst = max(
        abs(
            log_objective_direct(_freeze(n, a, b).zeros, _freeze(n, a, b).params)
            - log_objective_closed_form(_freeze(n, a, b).params)
        )
        for (n, a, b) in GRID
    )
    return [check_bound("max_log_discriminant_gap", worst, 1e-10)]


def criterion_products() -> list[Check]:
    worst = 0.0
    for (n, a, b) in GRID:
        fp = _freeze(n, a, b)
        lm, lp = log_products(fp.params)
        worst = max(worst, abs(fp.log_prod_one_minus - lm), abs(fp.log_prod_one_plus - lp))
    return [check_bound("max_log_product_gap", worst, 1e-11)]


def criterion_det_algebraic() -> list[Check]:
    worst = 0.0
    for (n, a, b) in GRID:
        closed, numerical = determinant_algebraic(_freeze(n, a, b).params, _freeze(n, a, b))
        worst = max(worst, abs(closed - numerical) / n)
    spot_closed, spot_num = determinant_algebraic(_freeze(2, 0.0, 1.0).params, _freeze(2, 0.0, 1.0))
    return [
        check_bound("max_logdet_S_gap_per_dim", worst, 1e-9),
        check_close("det_S_spot_n2_alpha0_beta0", math.exp(spot_num), 13.5, 1e-10),
    ]


def criterion_spectrum() -> list[Check]:
    worst = 0.0
    for (n, a, b) in GRID:
        fp = _freeze(n, a, b)
        lam = closed_form_spectrum(fp.params)
        vals = symmetric_eigendecompose(build_trigonometric(fp).entries).eigenvalues
        worst = max(worst, float(np.max(np.abs(vals - lam) / lam)))
    spot1 = symmetric_eigendecompose(build_trigonometric(_freeze(1, 1.0, 1.0)).entries).eigenvalues
    spot2 = symmetric_eigendecompose(build_trigonometric(_freeze(2, 0.0, 1.0)).entries).eigenvalues
    return [
        check_bound("max_eigenvalue_rel_error", worst, 1e-8),
        check_close("spectrum_spot_n1", float(spot1[0]), 6.0, 1e-10),
        check_close("spectrum_spot_n2_low", float(spot2[0]), 8.0, 1e-10),
        check_close("spectrum_spot_n2_high", float(spot2[1]), 12.0, 1e-10),
    ]


def criterion_eigenvectors() -> list[Check]:
    worst_resid = 0.0
    worst_cos = 1.0
    for (n, a, b) in GRID:
        fp = _freeze(n, a, b)
        trig = build_trigonometric(fp)
        norm = float(np.max(np.abs(closed_form_spectrum(fp.params))))
        for report in verify_eigenvectors(trig, build_discrete_op_basis(fp)):
            worst_resid = max(worst_resid, report.residual / norm)
            worst_cos = min(worst_cos, report.cosine)
    return [
        check_bound("max_eigenvector_residual_scaled", worst_resid, 1e-8),
        check_bound("max_eigenvector_cos_defect", 1.0 - worst_cos, 1e-8),
    ]


def criterion_cross_relation() -> list[Check]:
    worst_rel = 0.0
    worst_det = 0.0
    for (n, a, b) in GRID:
        fp = _freeze(n, a, b)
        alg = build_algebraic(fp)
        trig = build_trigonometric(fp)
        scale = float(np.max(np.abs(trig.entries)))
        worst_rel = max(worst_rel, cross_relation_residual(alg, trig) / scale)
        closed, numerical = determinant_trigonometric(fp.params, fp)
        worst_det = max(worst_det, abs(closed - numerical) / n)
    return [
        check_bound("max_cross_relation_residual_scaled", worst_rel, 1e-10),
        check_bound("max_logdet_St_gap_per_dim", worst_det, 1e-9),
    ]


def _beta_oracle_gap(a: float, b: float, kappa: float) -> float:
    """n=1 Selberg constant against the 1-D Beta integral, in log units."""
    params = EnsembleParams(1, a, b, kappa)
    p = 0.5 * kappa * (a + b) + 0.5
    q = 0.5 * kappa * b + 0.5
    log_beta = math.lgamma(p) + math.lgamma(q) - math.lgamma(p + q)
    oracle = -(0.5 * kappa * (a + 2.0 * b) * math.log(2.0) + log_beta)
    return abs(normalization.log_selberg_constant(params) - oracle)


def _quadrature_oracle_gap(a: float, b: float, kappa: float) -> float:
    """n=2 Selberg constant against adaptive 2-D quadrature, relative."""
    from scipy import integrate

    params = EnsembleParams(2, a, b, kappa)
    e_minus = 0.5 * kappa * (a + b) - 0.5
    e_plus = 0.5 * kappa * b - 0.5

    def integrand(x2, x1):
        return (
            (x2 - x1) ** kappa
            * (1.0 - x1) ** e_minus
            * (1.0 + x1) ** e_plus
            * (1.0 - x2) ** e_minus
            * (1.0 + x2) ** e_plus
        )

    value, _ = integrate.dblquad(
        integrand, -1.0, 1.0, lambda x1: x1, lambda _: 1.0, epsabs=0.0, epsrel=1e-10
    )
    analytic = math.exp(-normalization.log_selberg_constant(params))
    return abs(value - analytic) / analytic


def criterion_selberg() -> list[Check]:
    checks = []
    worst_beta = max(_beta_oracle_gap(a, b, kappa) for (a, b) in GRID_AB for kappa in (1.0, 7.5, 100.0))
    checks.append(check_bound("n1_beta_oracle_log_gap", worst_beta, 1e-10))

    worst_quad = max(_quadrature_oracle_gap(a, b, 2.0) for (a, b) in GRID_AB)
    checks.append(check_bound("n2_quadrature_oracle_rel_gap", worst_quad, 1e-6))

    monotone = True
    worst_identity = 0.0
    for (n, a, b) in GRID:
        fp = _freeze(n, a, b)
        limit = normalization.log_fluctuation_prefactor_limit(fp.params)
        gaps = [
            abs(
                normalization.log_fluctuation_prefactor(EnsembleParams(n, a, b, kappa), fp)
                - limit
            )
            for kappa in (1e2, 1e3, 1e4)
        ]
        monotone &= _strictly_decreasing(gaps)
        _, logdet = determinant_algebraic(fp.params, fp)
        gaussian = 0.5 * logdet - 0.5 * n * math.log(2.0 * math.pi)
        worst_identity = max(worst_identity, abs(limit - gaussian))
    checks.append(check_true("prefactor_convergence_monotone", monotone, "decreasing over kappa grid"))
    checks.append(check_bound("gaussian_normalizer_log_gap", worst_identity, 1e-10))
    return checks


# --- Monte Carlo criteria ----------------------------------------------------


def criterion_lln(seed: int | None = None) -> list[Check]:
    cfg = calibration.LLN_CONFIG
    seed = calibration.DEFAULT_SEED if seed is None else seed
    n, a, b = cfg["n"], cfg["a"], cfg["b"]
    fp = _freeze(n, a, b)
    distances = []
    for kappa in cfg["kappas"]:
        batch = sample_mcmc(
            SamplerConfig(
                params=EnsembleParams(n, a, b, kappa),
                n_samples=cfg["n_samples"],
                burn_in=cfg["burn_in"],
                thinning=cfg["thinning"],
                n_chains=cfg["n_chains"],
                seed=seed,
            )
        )
        distances.append(float(np.linalg.norm(batch.data.mean(axis=0) - fp.zeros)))
    return [
        check_true(
            "lln_mean_distance_decreasing",
            _strictly_decreasing(distances),
            f"decreasing: {['%.2e' % d for d in distances]}",
        )
    ]


def clt_pipeline(seed: int | None = None):
    """Shared sampling run for the covariance criterion and the CLI."""
    cfg = calibration.CLT_CONFIG
    seed = calibration.DEFAULT_SEED if seed is None else seed
    params = EnsembleParams(cfg["n"], cfg["a"], cfg["b"], cfg["kappa"])
    batch = sample_mcmc(
        SamplerConfig(
            params=params,
            n_samples=cfg["n_samples"],
            burn_in=cfg["burn_in"],
            thinning=cfg["thinning"],
            n_chains=cfg["n_chains"],
            seed=seed,
        )
    )
    return batch


def clt_errors(batch) -> dict:
    """Relative Frobenius errors of the empirical covariances in both frames,
    plus the rescaled means and their standard errors."""
    params = batch.params
    fp = _freeze(params.n, params.a, params.b)
    scale = math.sqrt(params.kappa)

    stats_alg = batch_statistics(batch, fp.zeros, scale)
    cov_alg = invert_to_covariance(build_algebraic(fp))
    err_alg = float(np.linalg.norm(stats_alg.covariance - cov_alg) / np.linalg.norm(cov_alg))

    trig = to_trigonometric(batch)
    stats_trig = batch_statistics(trig, fp.angles, scale)
    cov_trig = invert_to_covariance(build_trigonometric(fp))
    err_trig = float(np.linalg.norm(stats_trig.covariance - cov_trig) / np.linalg.norm(cov_trig))

    return {
        "frobenius_rel_error_algebraic": err_alg,
        "frobenius_rel_error_trigonometric": err_trig,
        "mean_algebraic": stats_alg.mean,
        "mean_se_algebraic": stats_alg.standard_errors,
        "mean_trigonometric": stats_trig.mean,
        "mean_se_trigonometric": stats_trig.standard_errors,
        "acceptance_rate": batch.acceptance_rate,
        "lag1_autocorrelation": lag_one_autocorrelation(batch),
    }


def criterion_clt(seed: int | None = None) -> list[Check]:
    errors = clt_errors(clt_pipeline(seed))
    return [
        check_bound(
            "clt_cov_frobenius_algebraic",
            errors["frobenius_rel_error_algebraic"],
            calibration.CLT_FROBENIUS_TOL,
        ),
        check_bound(
            "clt_cov_frobenius_trigonometric",
            errors["frobenius_rel_error_trigonometric"],
            calibration.CLT_FROBENIUS_TOL,
        ),
        check_bound(
            "clt_lag1_autocorrelation",
            float(np.max(errors["lag1_autocorrelation"])),
            calibration.LAG1_AUTOCORR_TOL,
        ),
    ]


def criterion_hermite() -> list[Check]:
    worst_det = 0.0
    for n in range(1, 21):
        limit = build_hermite_limit(n)
        logdet = float(2.0 * np.sum(np.log(np.diag(np.linalg.cholesky(limit.precision)))))
        closed = log_det_hermite_closed_form(n)
        worst_det = max(worst_det, abs(logdet - closed) / max(1.0, abs(closed)))
    checks = [check_bound("hermite_logdet_rel_gap", worst_det, 1e-8)]

    monotone = True
    terminal_ok = True
    for n in (2, 3, 5):
        table = hermite_convergence(n, calibration.LIMIT_ALPHAS)
        mats = [row[1] for row in table]
        zs = [row[2] for row in table]
        monotone &= _strictly_decreasing(mats) and _strictly_decreasing(zs)
        terminal_ok &= mats[-1] <= calibration.HERMITE_TERMINAL_MATRIX[n]
        terminal_ok &= zs[-1] <= calibration.HERMITE_TERMINAL_ZEROS[n]
    checks.append(check_true("hermite_convergence_monotone", monotone, "decreasing over alpha sweep"))
    checks.append(check_true("hermite_terminal_distance", terminal_ok, "below frozen bound"))
    return checks


def criterion_laguerre() -> list[Check]:
    worst_det = 0.0
    worst_prod = 0.0
    for n in range(1, 21):
        for beta in (0.0, 0.5, 2.0):
            limit = build_laguerre_limit(n, beta)
            logdet = float(2.0 * np.sum(np.log(np.diag(np.linalg.cholesky(limit.precision)))))
            closed = log_det_laguerre_closed_form(n, beta)
            worst_det = max(worst_det, abs(logdet - closed) / max(1.0, abs(closed)))
            log_prod = float(np.sum(np.log(limit.zeros)))
            log_poch = math.lgamma(beta + 1.0 + n) - math.lgamma(beta + 1.0)
            worst_prod = max(worst_prod, abs(log_prod - log_poch))
    checks = [
        check_bound("laguerre_logdet_rel_gap", worst_det, 1e-8),
        check_bound("laguerre_zero_product_log_gap", worst_prod, 1e-10),
    ]

    monotone = True
    terminal_ok = True
    for n in (2, 3, 5):
        for beta in (0.0, 0.5, 2.0):
            table = laguerre_convergence(n, beta, calibration.LIMIT_ALPHAS)
            mats = [row[1] for row in table]
            zs = [row[2] for row in table]
            monotone &= _strictly_decreasing(mats) and _strictly_decreasing(zs)
            terminal_ok &= mats[-1] <= calibration.LAGUERRE_TERMINAL_MATRIX[n]
            terminal_ok &= zs[-1] <= calibration.LAGUERRE_TERMINAL_ZEROS[n]
    checks.append(check_true("laguerre_convergence_monotone", monotone, "decreasing over alpha sweep"))
    checks.append(check_true("laguerre_terminal_distance", terminal_ok, "below frozen bound"))
    return checks


def criterion_determinism(seed: int | None = None) -> list[Check]:
    seed = calibration.DEFAULT_SEED if seed is None else seed
    config = SamplerConfig(
        params=EnsembleParams(2, 1.0, 1.0, 50.0),
        n_samples=2000,
        burn_in=200,
        thinning=2,
        n_chains=4,
        seed=seed,
    )

    def payload() -> str:
        batch = sample_mcmc(config)
        stats = batch_statistics(batch, _freeze(2, 1.0, 1.0).zeros, math.sqrt(50.0))
        return format_csv(batch) + repr(stats.mean.tolist()) + repr(stats.covariance.tolist())

    return [check_true("fixed_seed_payload_identical", payload() == payload(), "byte-identical")]


CRITERIA = (
    ("01-stationarity", criterion_stationarity, False),
    ("02-discriminant", criterion_discriminant, False),
    ("03-products", criterion_products, False),
    ("04-determinant-algebraic", criterion_det_algebraic, False),
    ("05-spectrum", criterion_spectrum, False),
    ("06-eigenvectors", criterion_eigenvectors, False),
    ("07-cross-relation", criterion_cross_relation, False),
    ("08-selberg-normalization", criterion_selberg, False),
    ("09-lln", criterion_lln, True),
    ("10-clt", criterion_clt, True),
    ("11-hermite-limit", criterion_hermite, False),
    ("12-laguerre-limit", criterion_laguerre, False),
    ("13-determinism", criterion_determinism, True),
)


def run_criteria(skip_mc: bool = False):
    """Yield (criterion_name, checks) over the acceptance grid."""
    for name, runner, is_mc in CRITERIA:
        if skip_mc and is_mc:
            continue
        yield name, runner()
