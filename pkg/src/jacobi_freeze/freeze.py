"""Freezing point of the ensemble: ordered Jacobi-polynomial zeros and the
closed-form scalars attached to them.

As kappa grows the eigenvalue cloud collapses onto the ordered zeros
z_1 < ... < z_n of P_n^(alpha,beta); those zeros maximize the weighted
Vandermonde objective

    phi(x) = prod_{i<j} (x_j - x_i)
             * prod_j (1 - x_j)^((a+b)/2) * (1 + x_j)^(b/2)

on the alcove and satisfy the electrostatic stationarity system.
"""

from __future__ import annotations

from dataclasses import dataclass

import math
import numpy as np
from scipy.linalg import eigh_tridiagonal

from .params import EnsembleParams
from .special import (
    jacobi_deriv,
    jacobi_eval,
    jacobi_recurrence,
    log_pochhammer,
)

# Newton polish target: |P(z_j)| <= POLISH_RTOL * |P'(z_j)| * local spacing.
POLISH_RTOL = 1e-13
MAX_NEWTON_STEPS = 5
# A Newton increment this small means the iteration hit the rounding floor
# of double precision; for extreme indices (zeros clustered within ~1/alpha
# of an endpoint) that floor lies above the spacing-based target.
_STALL_EPS = 4.0 * np.finfo(float).eps

# Construction-time bound on the stationarity system at the computed zeros.
STATIONARITY_TOL = 1e-10
# Residual floor per unit of residual sensitivity: each zero carries at best
# a half-ulp representation offset, which the wall terms amplify by the
# precision-matrix diagonal.
_RESIDUAL_FLOOR_EPS = 64.0 * np.finfo(float).eps


class ZeroConvergenceError(RuntimeError):
    """Newton polish failed to reach tolerance (recurrence-coefficient bug)."""


@dataclass(frozen=True)
class FreezePoint:
    """Deterministic kappa -> infinity limit configuration of one ensemble.

    `zeros` is ascending in (-1, 1); `angles` is the trigonometric image
    t_j = arccos(z_j) / 2, which is automatically descending in (0, pi/2).
    The cached scalars are evaluated termwise in log space directly from the
    stored zeros; closed forms live in the module-level functions so the two
    routes stay independently testable.
    """

    params: EnsembleParams
    zeros: np.ndarray
    angles: np.ndarray
    log_objective: float
    log_prod_one_minus: float
    log_prod_one_plus: float


def _local_spacing(z: np.ndarray) -> np.ndarray:
    """Distance from each zero to its nearest neighbor (2.0 for n = 1)."""
    if z.size == 1:
        return np.array([2.0])
    gaps = np.diff(z)
    return np.minimum(np.concatenate(([gaps[0]], gaps)), np.concatenate((gaps, [gaps[-1]])))


def compute_zeros(params: EnsembleParams) -> np.ndarray:
    """Ascending zeros of P_n^(alpha,beta) for the ensemble's (alpha, beta).

    Golub-Welsch eigenvalues of the symmetric tridiagonal recurrence matrix,
    then at most five Newton steps on P_n itself so the result does not
    inherit the eigensolver's accuracy floor.
    """
    n, alpha, beta = params.n, params.alpha, params.beta
    rec = jacobi_recurrence(n, alpha, beta)
    z = eigh_tridiagonal(rec.diag, rec.offdiag, eigvals_only=True)
    z = np.sort(np.asarray(z, dtype=float))

    # Always take at least one Newton step so the result is pinned by the
    # polynomial itself, not by the eigensolver's accuracy floor.
    for _ in range(MAX_NEWTON_STEPS):
        p = jacobi_eval(n, alpha, beta, z)
        dp = jacobi_deriv(n, alpha, beta, z)
        delta = p / dp
        z = z - delta
        p = jacobi_eval(n, alpha, beta, z)
        dp = jacobi_deriv(n, alpha, beta, z)
        if np.all(np.abs(p) <= POLISH_RTOL * np.abs(dp) * _local_spacing(z)) or np.all(
            np.abs(delta) <= _STALL_EPS * np.maximum(np.abs(z), 1.0)
        ):
            break
    else:
        raise ZeroConvergenceError(
            f"Newton polish did not converge in {MAX_NEWTON_STEPS} steps "
            f"for n={n}, alpha={alpha}, beta={beta}"
        )

    z = np.sort(z)
    if not (np.all(z > -1.0) and np.all(z < 1.0) and np.all(np.diff(z) > 0.0)):
        raise ZeroConvergenceError("computed zeros are not strictly ordered interior points")
    return z


def stationarity_residual(zeros: np.ndarray, params: EnsembleParams) -> np.ndarray:
    """Electrostatic stationarity residual at each coordinate,

        r_j = sum_{i != j} 1/(z_j - z_i) + (a+b)/2 * 1/(z_j - 1)
              + b/2 * 1/(z_j + 1),

    which vanishes exactly at the zeros of P_n^(alpha,beta).
    """
    z = np.asarray(zeros, dtype=float)
    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, np.inf)
    pair = np.sum(1.0 / diff, axis=1)
    return pair + 0.5 * (params.a + params.b) / (z - 1.0) + 0.5 * params.b / (z + 1.0)


def log_objective_direct(zeros: np.ndarray, params: EnsembleParams) -> float:
    """log phi evaluated termwise from an explicit configuration."""
    z = np.asarray(zeros, dtype=float)
    i, j = np.triu_indices(z.size, 1)
    pair = float(np.sum(np.log(z[j] - z[i])))
    walls = float(
        np.sum(
            0.5 * (params.a + params.b) * np.log1p(-z) + 0.5 * params.b * np.log1p(z)
        )
    )
    return pair + walls


def log_objective_closed_form(params: EnsembleParams) -> float:
    """log of the maximum of phi, from the discriminant of P_n^(alpha,beta):

    phi(z) = 2^[(n/2)(n+alpha+beta+1)]
             * prod_j j^(j/2) (alpha+j)^((alpha+j)/2) (beta+j)^((beta+j)/2)
                      / (n+alpha+beta+j)^((n+alpha+beta+j)/2).
    """
    n, alpha, beta = params.n, params.alpha, params.beta
    total = 0.5 * n * (n + alpha + beta + 1.0) * math.log(2.0)
    for j in range(1, n + 1):
        total += 0.5 * j * math.log(j)
        total += 0.5 * (alpha + j) * math.log(alpha + j)
        total += 0.5 * (beta + j) * math.log(beta + j)
        total -= 0.5 * (n + alpha + beta + j) * math.log(n + alpha + beta + j)
    return total


def log_products(params: EnsembleParams) -> tuple[float, float]:
    """Closed forms of (log prod_j (1 - z_j), log prod_j (1 + z_j)):

    prod (1 -/+ z_j) = 2^n * prod_j (alpha_or_beta + j) / (n+alpha+beta+j).
    """
    n, alpha, beta = params.n, params.alpha, params.beta
    denom = log_pochhammer(n + alpha + beta + 1.0, n)
    log_minus = n * math.log(2.0) + log_pochhammer(alpha + 1.0, n) - denom
    log_plus = n * math.log(2.0) + log_pochhammer(beta + 1.0, n) - denom
    return log_minus, log_plus


def _residual_sensitivity(z: np.ndarray, params: EnsembleParams) -> float:
    """Largest diagonal derivative of the stationarity system, which bounds
    how strongly per-zero rounding offsets show up in the residual."""
    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, np.inf)
    diag = (
        np.sum(1.0 / diff**2, axis=1)
        + 0.5 * (params.a + params.b) / (1.0 - z) ** 2
        + 0.5 * params.b / (1.0 + z) ** 2
    )
    return float(np.max(diag))


def freeze_point(params: EnsembleParams) -> FreezePoint:
    """Compute the freezing point and its cached log-space scalars.

    Raises ZeroConvergenceError if the stationarity system is violated beyond
    STATIONARITY_TOL or, for near-degenerate configurations (extreme indices
    push zeros within ulps of the endpoints), beyond the double-precision
    representation floor.
    """
    z = compute_zeros(params)
    resid = stationarity_residual(z, params)
    worst = float(np.max(np.abs(resid)))
    gate = max(STATIONARITY_TOL, _RESIDUAL_FLOOR_EPS * _residual_sensitivity(z, params))
    if worst > gate:
        raise ZeroConvergenceError(
            f"stationarity residual {worst:.3e} exceeds {gate:.1e}"
        )
    return FreezePoint(
        params=params,
        zeros=z,
        angles=0.5 * np.arccos(z),
        log_objective=log_objective_direct(z, params),
        log_prod_one_minus=float(np.sum(np.log1p(-z))),
        log_prod_one_plus=float(np.sum(np.log1p(z))),
    )
