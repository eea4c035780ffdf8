"""Command-line surface: reproducible, machine-readable verification reports.

Every command assembles a RunReport whose checks carry their tolerances, so
JSON output is self-describing.  Exit codes: 0 all checks pass, 1 a check
failed, 2 usage or parameter error.  With a fixed seed the numeric payload
is byte-identical across runs; only the timestamp field varies.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import __version__, calibration, verify
from .freeze import (
    freeze_point,
    log_objective_closed_form,
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
from .normalization import (
    log_fluctuation_prefactor,
    log_fluctuation_prefactor_limit,
    log_selberg_constant,
)
from .params import EnsembleParams
from .precision import (
    build_algebraic,
    build_trigonometric,
    cross_relation_residual,
    invert_to_covariance,
)
from .sampler import SamplerConfig, sample_mcmc, write_csv
from .spectral import (
    build_discrete_op_basis,
    closed_form_spectrum,
    determinant_algebraic,
    determinant_trigonometric,
    symmetric_eigendecompose,
    verify_eigenvectors,
)
from .verify import Check, check_bound, check_true

SCHEMA_VERSION = 1


@dataclass
class RunReport:
    command: str
    params: dict
    results: dict
    checks: list[Check]
    seed: int | None
    schema_version: int = SCHEMA_VERSION
    version: str = __version__
    timestamp: str = field(
        default_factory=lambda: time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    )

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _jsonable(obj):
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, Enum):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {k: _jsonable(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def report_json(report: RunReport) -> str:
    payload = {
        "schema_version": report.schema_version,
        "version": report.version,
        "command": report.command,
        "timestamp": report.timestamp,
        "seed": report.seed,
        "params": _jsonable(report.params),
        "results": _jsonable(report.results),
        "checks": [_jsonable(c) for c in report.checks],
        "all_passed": report.all_passed,
    }
    return json.dumps(payload, indent=2)


def _print_human(report: RunReport) -> None:
    header = ", ".join(f"{k}={v}" for k, v in report.params.items())
    print(f"jacobi-freeze {report.command} ({header})")
    for key, value in report.results.items():
        if isinstance(value, np.ndarray):
            value = np.array2string(value, precision=10, max_line_width=100)
        print(f"  {key}: {value}")
    for c in report.checks:
        mark = "PASS" if c.passed else "FAIL"
        print(f"  [{mark}] {c.name}: actual={c.actual} expected={c.expected} tol={c.tolerance:g}")
    print("all checks passed" if report.all_passed else "CHECKS FAILED")


def _resolve_seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get(calibration.SEED_ENV_VAR)
    return int(env) if env else calibration.DEFAULT_SEED


# --- commands ----------------------------------------------------------------


def cmd_zeros(args) -> RunReport:
    params = EnsembleParams(args.n, args.a, args.b)
    fp = freeze_point(params)
    resid = float(np.max(np.abs(stationarity_residual(fp.zeros, params))))
    log_obj_closed = log_objective_closed_form(params)
    lm_closed, lp_closed = log_products(params)
    results = {
        "zeros": fp.zeros,
        "angles": fp.angles,
        "max_stationarity_residual": resid,
        "log_objective_direct": fp.log_objective,
        "log_objective_closed_form": log_obj_closed,
        "log_prod_one_minus_direct": fp.log_prod_one_minus,
        "log_prod_one_minus_closed": lm_closed,
        "log_prod_one_plus_direct": fp.log_prod_one_plus,
        "log_prod_one_plus_closed": lp_closed,
    }
    checks = [
        check_bound("stationarity_residual", resid, 1e-10),
        check_bound("log_objective_gap", abs(fp.log_objective - log_obj_closed), 1e-10),
        check_bound("log_prod_one_minus_gap", abs(fp.log_prod_one_minus - lm_closed), 1e-11),
        check_bound("log_prod_one_plus_gap", abs(fp.log_prod_one_plus - lp_closed), 1e-11),
    ]
    return RunReport("zeros", {"n": args.n, "a": args.a, "b": args.b}, results, checks, None)


def cmd_precision(args) -> RunReport:
    params = EnsembleParams(args.n, args.a, args.b)
    fp = freeze_point(params)
    alg = build_algebraic(fp)
    trig = build_trigonometric(fp)
    cross = cross_relation_residual(alg, trig) / float(np.max(np.abs(trig.entries)))
    closed_s, num_s = determinant_algebraic(params, fp)
    closed_t, num_t = determinant_trigonometric(params, fp)
    cov = invert_to_covariance(alg)
    inverse_defect = float(np.max(np.abs(alg.entries @ cov - np.eye(params.n))))
    results = {
        "algebraic_entries": alg.entries,
        "trigonometric_entries": trig.entries,
        "cross_relation_residual_scaled": cross,
        "log_det_algebraic_closed": closed_s,
        "log_det_algebraic_numerical": num_s,
        "log_det_trigonometric_closed": closed_t,
        "log_det_trigonometric_numerical": num_t,
    }
    checks = [
        check_bound("cross_relation_residual_scaled", cross, 1e-10),
        check_bound("logdet_S_gap", abs(closed_s - num_s), 1e-9 * params.n),
        check_bound("logdet_St_gap", abs(closed_t - num_t), 1e-9 * params.n),
        check_bound("inverse_defect", inverse_defect, 1e-10),
    ]
    return RunReport("precision", {"n": args.n, "a": args.a, "b": args.b}, results, checks, None)


def cmd_spectrum(args) -> RunReport:
    params = EnsembleParams(args.n, args.a, args.b)
    fp = freeze_point(params)
    trig = build_trigonometric(fp)
    lam = closed_form_spectrum(params)
    decomp = symmetric_eigendecompose(trig.entries)
    rel_err = float(np.max(np.abs(decomp.eigenvalues - lam) / lam))
    reports = verify_eigenvectors(trig, build_discrete_op_basis(fp))
    worst_resid = max(r.residual for r in reports) / float(np.max(lam))
    worst_cos = min(r.cosine for r in reports)
    results = {
        "eigenvalues_numerical": decomp.eigenvalues,
        "eigenvalues_closed_form": lam,
        "max_eigenvalue_rel_error": rel_err,
        "max_eigenvector_residual_scaled": worst_resid,
        "min_eigenvector_cosine": worst_cos,
    }
    checks = [
        check_bound("eigenvalue_rel_error", rel_err, 1e-8),
        check_bound("eigenvector_residual_scaled", worst_resid, 1e-8),
        check_bound("eigenvector_cos_defect", 1.0 - worst_cos, 1e-8),
    ]
    return RunReport("spectrum", {"n": args.n, "a": args.a, "b": args.b}, results, checks, None)


def cmd_normalization(args) -> RunReport:
    kappas = args.kappas
    params0 = EnsembleParams(args.n, args.a, args.b)
    fp = freeze_point(params0)
    limit = log_fluctuation_prefactor_limit(params0)
    table = []
    for kappa in kappas:
        p = EnsembleParams(args.n, args.a, args.b, kappa)
        log_c = log_selberg_constant(p)
        log_pref = log_fluctuation_prefactor(p, fp)
        table.append({"kappa": kappa, "log_selberg": log_c, "log_prefactor": log_pref})
    gaps = [abs(row["log_prefactor"] - limit) for row in table]
    _, logdet = determinant_algebraic(params0, fp)
    gaussian = 0.5 * logdet - 0.5 * params0.n * math.log(2.0 * math.pi)
    results = {
        "table": table,
        "log_prefactor_limit": limit,
        "gaussian_normalizer_log": gaussian,
        "prefactor_gaps": gaps,
    }
    checks = [
        check_true(
            "prefactor_convergence_monotone",
            all(x > y for x, y in zip(gaps, gaps[1:])),
            "decreasing over kappas",
        ),
        check_bound("gaussian_normalizer_log_gap", abs(limit - gaussian), 1e-10),
    ]
    if args.n == 1:
        worst = max(verify._beta_oracle_gap(args.a, args.b, kappa) for kappa in kappas)
        checks.append(check_bound("n1_beta_oracle_log_gap", worst, 1e-10))
    return RunReport(
        "normalization",
        {"n": args.n, "a": args.a, "b": args.b, "kappas": list(kappas)},
        results,
        checks,
        None,
    )


def _sampler_config(args, seed: int) -> SamplerConfig:
    return SamplerConfig(
        params=EnsembleParams(args.n, args.a, args.b, args.kappa),
        n_samples=args.samples,
        burn_in=args.burn_in,
        thinning=args.thinning,
        step_scale=args.step_scale,
        n_chains=args.chains,
        seed=seed,
    )


def cmd_sample(args) -> RunReport:
    seed = _resolve_seed(args.seed)
    config = _sampler_config(args, seed)
    batch = sample_mcmc(config)
    write_csv(batch, args.out)
    print(f"wrote {batch.data.shape[0]} samples to {args.out}", file=sys.stderr)
    ordered = bool(
        np.all(batch.data > -1.0)
        and np.all(batch.data < 1.0)
        and (batch.data.shape[1] == 1 or np.all(np.diff(batch.data, axis=1) > 0.0))
    )
    results = {
        "acceptance_rate": batch.acceptance_rate,
        "sample_mean": batch.data.mean(axis=0),
        "sample_std": batch.data.std(axis=0, ddof=1),
        "rows": int(batch.data.shape[0]),
        "output": str(args.out),
    }
    checks = [check_true("rows_ordered_interior", ordered, "all rows in open alcove")]
    if args.step_scale is None:
        lo, hi = calibration.ACCEPTANCE_RATE_BAND
        checks.append(
            Check(
                "acceptance_rate_band",
                f"[{lo}, {hi}]",
                batch.acceptance_rate,
                0.0,
                bool(lo <= batch.acceptance_rate <= hi),
            )
        )
    return RunReport(
        "sample",
        {
            "n": args.n,
            "a": args.a,
            "b": args.b,
            "kappa": args.kappa,
            "samples": args.samples,
            "burn_in": args.burn_in,
            "thinning": args.thinning,
            "chains": args.chains,
        },
        results,
        checks,
        seed,
    )


def cmd_clt(args) -> RunReport:
    seed = _resolve_seed(args.seed)
    config = _sampler_config(args, seed)
    print("sampling (this may take a while at large sample counts)...", file=sys.stderr)
    batch = sample_mcmc(config)
    errors = verify.clt_errors(batch)
    mean_worst = float(np.max(np.abs(errors["mean_algebraic"])))
    results = {
        "acceptance_rate": errors["acceptance_rate"],
        "frobenius_rel_error_algebraic": errors["frobenius_rel_error_algebraic"],
        "frobenius_rel_error_trigonometric": errors["frobenius_rel_error_trigonometric"],
        "rescaled_mean_algebraic": errors["mean_algebraic"],
        "rescaled_mean_se_algebraic": errors["mean_se_algebraic"],
        "rescaled_mean_trigonometric": errors["mean_trigonometric"],
        "lag1_autocorrelation": errors["lag1_autocorrelation"],
    }
    checks = [
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
        check_bound("clt_mean_abs", mean_worst, calibration.CLT_MEAN_ABS_TOL),
        check_bound(
            "clt_lag1_autocorrelation",
            float(np.max(errors["lag1_autocorrelation"])),
            calibration.LAG1_AUTOCORR_TOL,
        ),
    ]
    return RunReport(
        "clt",
        {
            "n": args.n,
            "a": args.a,
            "b": args.b,
            "kappa": args.kappa,
            "samples": args.samples,
            "burn_in": args.burn_in,
            "thinning": args.thinning,
            "chains": args.chains,
        },
        results,
        checks,
        seed,
    )


def cmd_limits(args) -> RunReport:
    alphas = args.alphas
    if args.mode == "hermite":
        limit = build_hermite_limit(args.n)
        logdet = float(2.0 * np.sum(np.log(np.diag(np.linalg.cholesky(limit.precision)))))
        closed = log_det_hermite_closed_form(args.n)
        table = hermite_convergence(args.n, alphas)
        params = {"mode": "hermite", "n": args.n, "alphas": list(alphas)}
    else:
        limit = build_laguerre_limit(args.n, args.beta)
        logdet = float(2.0 * np.sum(np.log(np.diag(np.linalg.cholesky(limit.precision)))))
        closed = log_det_laguerre_closed_form(args.n, args.beta)
        table = laguerre_convergence(args.n, args.beta, alphas)
        params = {"mode": "laguerre", "n": args.n, "beta": args.beta, "alphas": list(alphas)}
    mats = [row[1] for row in table]
    zs = [row[2] for row in table]
    results = {
        "zeros": limit.zeros,
        "log_det_numerical": logdet,
        "log_det_closed_form": closed,
        "convergence_table": [
            {"alpha": row[0], "matrix_distance": row[1], "zero_distance": row[2]} for row in table
        ],
    }
    checks = [
        check_bound("logdet_gap", abs(logdet - closed), 1e-8 * max(1.0, abs(closed))),
        check_true(
            "matrix_distance_decreasing",
            all(x > y for x, y in zip(mats, mats[1:])),
            "decreasing over alphas",
        ),
        check_true(
            "zero_distance_decreasing",
            all(x > y for x, y in zip(zs, zs[1:])),
            "decreasing over alphas",
        ),
    ]
    return RunReport("limits", params, results, checks, None)


def cmd_verify_all(args) -> RunReport:
    results = {}
    checks: list[Check] = []
    for name, criterion_checks in verify.run_criteria(skip_mc=args.skip_mc):
        passed = all(c.passed for c in criterion_checks)
        results[name] = "PASS" if passed else "FAIL"
        print(f"{'PASS' if passed else 'FAIL'}  {name}", file=sys.stderr)
        checks.extend(
            Check(f"{name}/{c.name}", c.expected, c.actual, c.tolerance, c.passed)
            for c in criterion_checks
        )
    return RunReport(
        "verify-all", {"skip_mc": args.skip_mc}, results, checks, calibration.DEFAULT_SEED
    )


# --- argument parsing ---------------------------------------------------------


def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated floats, got {text!r}") from exc


def _add_ensemble_args(sub, kappa: bool = False) -> None:
    sub.add_argument("--n", type=int, required=True, help="dimension (n >= 1)")
    sub.add_argument("--a", type=float, required=True, help="weight parameter a >= 0")
    sub.add_argument("--b", type=float, required=True, help="weight parameter b > 0")
    if kappa:
        sub.add_argument("--kappa", type=float, required=True, help="freezing parameter kappa > 0")


def _add_sampler_args(sub) -> None:
    sub.add_argument("--samples", type=int, required=True, help="retained samples")
    sub.add_argument("--seed", type=int, default=None, help="RNG seed (default: env or built-in)")
    sub.add_argument("--burn-in", type=int, default=1000, dest="burn_in")
    sub.add_argument("--thinning", type=int, default=1)
    sub.add_argument("--chains", type=int, default=8)
    sub.add_argument("--step-scale", type=float, default=None, dest="step_scale")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobi-freeze",
        description="Freezing-regime limits of beta-Jacobi ensembles: "
        "verification reports for freeze points, precision matrices, spectra, "
        "Selberg normalization, and Monte Carlo limit checks.",
    )
    parser.add_argument("--format", choices=("human", "json"), default="human")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("zeros", help="freeze point, stationarity, discriminant, products")
    _add_ensemble_args(p)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("precision", help="precision matrices, cross relation, determinants")
    _add_ensemble_args(p)
    p.set_defaults(func=cmd_precision)

    p = sub.add_parser("spectrum", help="eigenvalues/eigenvectors vs closed forms")
    _add_ensemble_args(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("normalization", help="Selberg constants and freezing asymptotics")
    _add_ensemble_args(p)
    p.add_argument("--kappas", type=_float_list, default=(1e2, 1e3, 1e4))
    p.set_defaults(func=cmd_normalization)

    p = sub.add_parser("sample", help="draw samples, write CSV")
    _add_ensemble_args(p, kappa=True)
    _add_sampler_args(p)
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("clt", help="empirical covariance vs Gaussian limit, both frames")
    _add_ensemble_args(p, kappa=True)
    _add_sampler_args(p)
    p.set_defaults(func=cmd_clt)

    p = sub.add_parser("limits", help="Hermite/Laguerre degenerations")
    p.add_argument("--mode", choices=("hermite", "laguerre"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--beta", type=float, default=0.0, help="Laguerre index (mode=laguerre)")
    p.add_argument("--alphas", type=_float_list, default=(1e2, 1e3, 1e4))
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("verify-all", help="run the full acceptance grid (CI entry point)")
    p.add_argument("--skip-mc", action="store_true", help="skip the Monte Carlo criteria")
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except ValueError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(report_json(report))
    else:
        _print_human(report)
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
