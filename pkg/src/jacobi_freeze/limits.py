"""Hermite and Laguerre degenerations of the algebraic precision matrix.

With both Jacobi indices tied and growing (alpha = beta -> infinity), the
rescaled matrix S/alpha converges to the Hermite-ensemble precision matrix
built on the zeros of H_n; with beta fixed and alpha -> infinity,
(8/alpha^2) S converges to the Laguerre matrix built on the zeros of
L_n^(beta).  Both limits come with exact determinant identities:
det S_H = n! and det S_L = n!/(beta+1)_n.
"""

from __future__ import annotations

from dataclasses import dataclass

import math
import numpy as np
from scipy.linalg import eigh_tridiagonal

from .freeze import MAX_NEWTON_STEPS, POLISH_RTOL, ZeroConvergenceError, _local_spacing, freeze_point
from .params import EnsembleParams
from .precision import _pairwise_inverse_square, build_algebraic


@dataclass(frozen=True)
class HermiteLimit:
    """Zeros of the physicists' Hermite polynomial H_n (symmetric about 0)
    and the precision matrix s_jj = 1 + sum_{l != j} (z_j - z_l)^(-2),
    s_ij = -(z_i - z_j)^(-2)."""

    n: int
    zeros: np.ndarray
    precision: np.ndarray


@dataclass(frozen=True)
class LaguerreLimit:
    """Zeros of L_n^(beta) (all positive) and the precision matrix
    s_jj = (beta+1)/z_j^2 + 2 sum_{l != j} (z_j - z_l)^(-2),
    s_ij = -2 (z_i - z_j)^(-2)."""

    n: int
    beta: float
    zeros: np.ndarray
    precision: np.ndarray


def _hermite_eval(n: int, x: np.ndarray) -> np.ndarray:
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev
    p = 2.0 * x
    for m in range(2, n + 1):
        p, p_prev = 2.0 * x * p - 2.0 * (m - 1.0) * p_prev, p
    return p


def _laguerre_eval(n: int, beta: float, x: np.ndarray) -> np.ndarray:
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev
    p = 1.0 + beta - x
    for m in range(2, n + 1):
        p, p_prev = ((2.0 * m - 1.0 + beta - x) * p - (m - 1.0 + beta) * p_prev) / m, p
    return p


def _polish(z: np.ndarray, value, deriv) -> np.ndarray:
    """Newton polish with the same stopping contract as the Jacobi zeros."""
    stall = 4.0 * np.finfo(float).eps
    for _ in range(MAX_NEWTON_STEPS):
        delta = value(z) / deriv(z)
        z = z - delta
        if np.all(
            np.abs(value(z)) <= POLISH_RTOL * np.abs(deriv(z)) * _local_spacing(z)
        ) or np.all(np.abs(delta) <= stall * np.maximum(np.abs(z), 1.0)):
            return np.sort(z)
    raise ZeroConvergenceError("Newton polish on limit-family zeros did not converge")


def hermite_zeros(n: int) -> np.ndarray:
    """Ascending zeros of the physicists' Hermite polynomial H_n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return np.zeros(1)
    off = np.sqrt(0.5 * np.arange(1, n))
    z = np.sort(eigh_tridiagonal(np.zeros(n), off, eigvals_only=True))
    return _polish(
        z,
        lambda t: _hermite_eval(n, t),
        lambda t: 2.0 * n * _hermite_eval(n - 1, t),
    )


def laguerre_zeros(n: int, beta: float) -> np.ndarray:
    """Ascending zeros of the generalized Laguerre polynomial L_n^(beta)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not beta > -1.0:
        raise ValueError(f"need beta > -1, got {beta}")
    diag = 2.0 * np.arange(n, dtype=float) + beta + 1.0
    if n == 1:
        z = diag[:1].copy()
    else:
        k = np.arange(1, n, dtype=float)
        off = np.sqrt(k * (k + beta))
        z = np.sort(eigh_tridiagonal(diag, off, eigvals_only=True))
    return _polish(
        z,
        lambda t: _laguerre_eval(n, beta, t),
        lambda t: -_laguerre_eval(n - 1, beta + 1.0, t),
    )


def build_hermite_limit(n: int) -> HermiteLimit:
    z = hermite_zeros(n)
    inv_sq = _pairwise_inverse_square(z)
    mat = -inv_sq
    np.fill_diagonal(mat, 1.0 + inv_sq.sum(axis=1))
    mat = np.triu(mat) + np.triu(mat, 1).T
    return HermiteLimit(n=n, zeros=z, precision=mat)


def build_laguerre_limit(n: int, beta: float) -> LaguerreLimit:
    z = laguerre_zeros(n, beta)
    inv_sq = _pairwise_inverse_square(z)
    mat = -2.0 * inv_sq
    np.fill_diagonal(mat, (beta + 1.0) / z**2 + 2.0 * inv_sq.sum(axis=1))
    mat = np.triu(mat) + np.triu(mat, 1).T
    return LaguerreLimit(n=n, beta=beta, zeros=z, precision=mat)


def _jacobi_matrix_and_zeros(n: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    fp = freeze_point(EnsembleParams(n, a, b))
    return build_algebraic(fp).entries, fp.zeros


def hermite_convergence(n: int, alphas) -> list[tuple[float, float, float]]:
    """For each alpha (with alpha = beta, i.e. a = 0, b = alpha + 1):
    relative Frobenius distance of S/alpha from the Hermite matrix, and the
    max deviation of sqrt(alpha) * z from the Hermite zeros.

    Returns [(alpha, matrix_distance, zero_distance), ...].
    """
    limit = build_hermite_limit(n)
    scale = float(np.linalg.norm(limit.precision))
    out = []
    for alpha in alphas:
        mat, z = _jacobi_matrix_and_zeros(n, 0.0, float(alpha) + 1.0)
        d_mat = float(np.linalg.norm(mat / alpha - limit.precision)) / scale
        d_zero = float(np.max(np.abs(np.sqrt(alpha) * z - limit.zeros)))
        out.append((float(alpha), d_mat, d_zero))
    return out


def laguerre_convergence(n: int, beta: float, alphas) -> list[tuple[float, float, float]]:
    """For each alpha (with beta fixed, i.e. b = beta + 1, a = alpha - beta):
    relative Frobenius distance of (8/alpha^2) S from the Laguerre matrix,
    and the max deviation of (alpha/2)(1 + z) from the Laguerre zeros.
    """
    limit = build_laguerre_limit(n, beta)
    scale = float(np.linalg.norm(limit.precision))
    out = []
    for alpha in alphas:
        alpha = float(alpha)
        if alpha <= beta:
            raise ValueError(f"need alpha > beta for a >= 0, got alpha={alpha}, beta={beta}")
        mat, z = _jacobi_matrix_and_zeros(n, alpha - beta, beta + 1.0)
        d_mat = float(np.linalg.norm(8.0 / alpha**2 * mat - limit.precision)) / scale
        d_zero = float(np.max(np.abs(0.5 * alpha * (1.0 + z) - limit.zeros)))
        out.append((alpha, d_mat, d_zero))
    return out


def log_det_hermite_closed_form(n: int) -> float:
    """log n!, the exact determinant of the Hermite precision matrix."""
    return math.lgamma(n + 1.0)


def log_det_laguerre_closed_form(n: int, beta: float) -> float:
    """log of n!/(beta+1)_n, the exact determinant of the Laguerre matrix."""
    return math.lgamma(n + 1.0) - (math.lgamma(beta + 1.0 + n) - math.lgamma(beta + 1.0))
