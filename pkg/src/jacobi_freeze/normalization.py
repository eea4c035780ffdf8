"""Selberg normalization of the ensemble density and its freezing asymptotics.

The density's normalizing constant c_kappa is an exact Selberg integral.
After recentering at the freezing point and rescaling by sqrt(kappa), the
constant part of the transformed density,

    C_kappa = c_kappa / kappa^(n/2) * prod_j (1 - z_j^2)^(-1/2) * phi(z)^kappa,

converges to the normalizer of the limiting Gaussian.  Everything here is
computed in log space: at n = 8, kappa = 100 the raw constants are already
thousands of orders of magnitude outside double range.
"""

from __future__ import annotations

from dataclasses import dataclass

import math

from .freeze import FreezePoint, freeze_point
from .params import EnsembleParams
from .special import log_gamma, log_pochhammer


@dataclass(frozen=True)
class NormalizationReport:
    """Log-space normalization constants of one ensemble at its kappa."""

    log_selberg: float
    log_prefactor: float
    log_prefactor_limit: float


def log_selberg_constant(params: EnsembleParams) -> float:
    """log c_kappa, from the Selberg integral over the alcove:

    1/c_kappa = 2^[(kappa n/2)(n+alpha+beta+1)] / n!
                * prod_j Gamma(1 + j kappa/2) / Gamma(1 + kappa/2)
                  * Gamma(kappa(beta+j)/2 + 1/2) Gamma(kappa(alpha+j)/2 + 1/2)
                    / Gamma(kappa(n+alpha+beta+j)/2 + 1).
    """
    n, alpha, beta, kappa = params.n, params.alpha, params.beta, params.kappa
    half_k = 0.5 * kappa
    log_inv = 0.5 * kappa * n * (n + alpha + beta + 1.0) * math.log(2.0) - log_gamma(n + 1.0)
    for j in range(1, n + 1):
        log_inv += log_gamma(1.0 + j * half_k) - log_gamma(1.0 + half_k)
        log_inv += log_gamma(half_k * (beta + j) + 0.5)
        log_inv += log_gamma(half_k * (alpha + j) + 0.5)
        log_inv -= log_gamma(half_k * (n + alpha + beta + j) + 1.0)
    return -log_inv


def log_fluctuation_prefactor(params: EnsembleParams, freeze: FreezePoint) -> float:
    """log C_kappa: the x-independent part of the density of the rescaled
    fluctuations around the freezing point."""
    n, kappa = params.n, params.kappa
    return (
        log_selberg_constant(params)
        - 0.5 * n * math.log(kappa)
        - 0.5 * (freeze.log_prod_one_minus + freeze.log_prod_one_plus)
        + kappa * freeze.log_objective
    )


def log_fluctuation_prefactor_limit(params: EnsembleParams) -> float:
    """log of the kappa -> infinity limit of C_kappa:

    lim C_kappa = sqrt(n!) / (2^(2n) pi^(n/2))
                  * ((n+alpha+beta+1)_n)^(3/2) / sqrt((alpha+1)_n (beta+1)_n),

    which equals sqrt(det S) / (2 pi)^(n/2) for the algebraic precision
    matrix S, i.e. the limiting Gaussian really is normalized.
    """
    n, alpha, beta = params.n, params.alpha, params.beta
    return (
        0.5 * log_gamma(n + 1.0)
        - 2.0 * n * math.log(2.0)
        - 0.5 * n * math.log(math.pi)
        + 1.5 * log_pochhammer(n + alpha + beta + 1.0, n)
        - 0.5 * (log_pochhammer(alpha + 1.0, n) + log_pochhammer(beta + 1.0, n))
    )


def normalization_report(
    params: EnsembleParams, freeze: FreezePoint | None = None
) -> NormalizationReport:
    fp = freeze if freeze is not None else freeze_point(params)
    return NormalizationReport(
        log_selberg=log_selberg_constant(params),
        log_prefactor=log_fluctuation_prefactor(params, fp),
        log_prefactor_limit=log_fluctuation_prefactor_limit(params),
    )
