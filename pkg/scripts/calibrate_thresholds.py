#!/usr/bin/env python3
"""Pre-registration measurement run for the frozen Monte Carlo tolerances.

Runs the LLN sweep, the covariance-limit pipeline, and the degeneration
sweeps over several seeds and prints the observed statistics next to the
currently frozen bounds in jacobi_freeze.calibration.  Re-run after any
sampler change before touching those constants.

Usage: python scripts/calibrate_thresholds.py [--seeds 5] [--quick]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from jacobi_freeze import calibration
from jacobi_freeze.freeze import freeze_point
from jacobi_freeze.limits import hermite_convergence, laguerre_convergence
from jacobi_freeze.normalization import (
    log_fluctuation_prefactor,
    log_fluctuation_prefactor_limit,
)
from jacobi_freeze.params import EnsembleParams
from jacobi_freeze.sampler import SamplerConfig, lag_one_autocorrelation, sample_mcmc
from jacobi_freeze.verify import clt_errors


def calibrate_clt(seeds, quick: bool) -> None:
    cfg = dict(calibration.CLT_CONFIG)
    if quick:
        cfg["n_samples"] = cfg["n_samples"] // 10
    params = EnsembleParams(cfg["n"], cfg["a"], cfg["b"], cfg["kappa"])
    print(f"\n== CLT pipeline {cfg} ==")
    rows = []
    for seed in seeds:
        t0 = time.time()
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
        err = clt_errors(batch)
        mean_abs = float(np.max(np.abs(err["mean_algebraic"])))
        mean_se = float(np.max(np.abs(err["mean_algebraic"] / err["mean_se_algebraic"])))
        lag1 = float(np.max(err["lag1_autocorrelation"]))
        rows.append((err["frobenius_rel_error_algebraic"], err["frobenius_rel_error_trigonometric"], mean_abs, mean_se, lag1))
        print(
            f"seed={seed:6d}  frob_alg={rows[-1][0]:.4f}  frob_trig={rows[-1][1]:.4f}  "
            f"max|mean|={mean_abs:.4f} ({mean_se:.1f} SE)  lag1={lag1:.3f}  "
            f"acc={batch.acceptance_rate:.3f}  [{time.time()-t0:.1f}s]"
        )
    rows = np.array(rows)
    print(f"max frob over seeds: {rows[:, :2].max():.4f}   frozen tol: {calibration.CLT_FROBENIUS_TOL}")
    print(f"max |mean| over seeds: {rows[:, 2].max():.4f}   frozen tol: {calibration.CLT_MEAN_ABS_TOL}")
    print(f"max lag1 over seeds: {rows[:, 4].max():.3f}   frozen tol: {calibration.LAG1_AUTOCORR_TOL}")


def calibrate_lln(seeds, quick: bool) -> None:
    cfg = dict(calibration.LLN_CONFIG)
    if quick:
        cfg["n_samples"] = cfg["n_samples"] // 10
    fp = freeze_point(EnsembleParams(cfg["n"], cfg["a"], cfg["b"]))
    print(f"\n== LLN sweep {cfg} ==")
    for seed in seeds:
        dists = []
        for kappa in cfg["kappas"]:
            batch = sample_mcmc(
                SamplerConfig(
                    params=EnsembleParams(cfg["n"], cfg["a"], cfg["b"], kappa),
                    n_samples=cfg["n_samples"],
                    burn_in=cfg["burn_in"],
                    thinning=cfg["thinning"],
                    n_chains=cfg["n_chains"],
                    seed=seed,
                )
            )
            dists.append(float(np.linalg.norm(batch.data.mean(axis=0) - fp.zeros)))
        decreasing = all(x > y for x, y in zip(dists, dists[1:]))
        ratios = [dists[i] / dists[i + 1] for i in range(len(dists) - 1)]
        print(
            f"seed={seed:6d}  distances={['%.3e' % d for d in dists]}  "
            f"ratios={['%.1f' % r for r in ratios]}  decreasing={decreasing}"
        )


def calibrate_acceptance_band(seeds) -> None:
    print("\n== acceptance rate at default proposal scale ==")
    cases = [(1, 1.0, 1.0, 1.0), (2, 0.0, 1.0, 10.0), (3, 1.0, 1.0, 500.0), (5, 0.5, 3.0, 100.0)]
    for (n, a, b, kappa) in cases:
        rates = []
        for seed in seeds[:2]:
            batch = sample_mcmc(
                SamplerConfig(
                    params=EnsembleParams(n, a, b, kappa),
                    n_samples=5000,
                    burn_in=500,
                    thinning=2,
                    n_chains=4,
                    seed=seed,
                )
            )
            rates.append(batch.acceptance_rate)
        print(
            f"n={n} a={a} b={b} kappa={kappa}: rates={['%.3f' % r for r in rates]}  "
            f"frozen band: {calibration.ACCEPTANCE_RATE_BAND}"
        )


def calibrate_limits() -> None:
    print("\n== degeneration terminal distances at alpha = 1e4 ==")
    for n in (2, 3, 5):
        table = hermite_convergence(n, calibration.LIMIT_ALPHAS)
        print(
            f"hermite n={n}: matrix={table[-1][1]:.3e} (frozen {calibration.HERMITE_TERMINAL_MATRIX[n]})  "
            f"zeros={table[-1][2]:.3e} (frozen {calibration.HERMITE_TERMINAL_ZEROS[n]})"
        )
    for n in (2, 3, 5):
        worst_m = worst_z = 0.0
        for beta in (0.0, 0.5, 2.0):
            table = laguerre_convergence(n, beta, calibration.LIMIT_ALPHAS)
            worst_m = max(worst_m, table[-1][1])
            worst_z = max(worst_z, table[-1][2])
        print(
            f"laguerre n={n}: matrix={worst_m:.3e} (frozen {calibration.LAGUERRE_TERMINAL_MATRIX[n]})  "
            f"zeros={worst_z:.3e} (frozen {calibration.LAGUERRE_TERMINAL_ZEROS[n]})"
        )


def calibrate_prefactor() -> None:
    print("\n== Stirling convergence of the fluctuation prefactor ==")
    params = EnsembleParams(1, 1.0, 1.0, calibration.PREFACTOR_KAPPA)
    fp = freeze_point(params)
    gap = abs(
        log_fluctuation_prefactor(params, fp)
        - log_fluctuation_prefactor_limit(params)
    )
    print(
        f"n=1 a=b=1 kappa={calibration.PREFACTOR_KAPPA:g}: |log C - lim| = {gap:.3e}  "
        f"(frozen {calibration.PREFACTOR_TOL})"
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", type=int, default=5, help="number of seeds to measure")
    parser.add_argument("--quick", action="store_true", help="10x smaller sample counts")
    args = parser.parse_args()
    seeds = [calibration.DEFAULT_SEED + 1000 * k for k in range(args.seeds)]
    print(f"seeds: {seeds}")
    calibrate_prefactor()
    calibrate_limits()
    calibrate_acceptance_band(seeds)
    calibrate_lln(seeds, args.quick)
    calibrate_clt(seeds, args.quick)


if __name__ == "__main__":
    main()
