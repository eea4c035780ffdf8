"""Spectra of the precision matrices: closed forms, discrete orthonormal
polynomials, and log-determinant identities.

The trigonometric precision matrix has the simple eigenvalues

    lambda_k = 2 k (2n + alpha + beta + 1 - k),    k = 1..n,

with eigenvectors generated by polynomials orthonormal with respect to the
discrete measure sum_j (1 - z_j^2) delta_{z_j} on the freezing point.
"""

from __future__ import annotations

from dataclasses import dataclass

import math
import numpy as np

from .freeze import FreezePoint, freeze_point
from .params import EnsembleParams
from .precision import Coordinates, PrecisionMatrix, build_algebraic, build_trigonometric
from .special import log_gamma, log_pochhammer

STIELTJES_BREAKDOWN_TOL = 1e-14


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues ascending; column k of `eigenvectors` is the unit
    eigenvector of eigenvalue k, sign-fixed so its first nonnegligible
    component is positive."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class DiscreteOPBasis:
    """Orthonormal polynomials q_0..q_{n-1} for the discrete measure with
    atoms `nodes` and masses `weights`, represented by their recurrence
    coefficients and their values on the nodes (values[j, k] = q_k(z_j)).

    Normalization: positive leading coefficients.
    """

    nodes: np.ndarray
    weights: np.ndarray
    diag: np.ndarray
    offdiag: np.ndarray
    values: np.ndarray


def _fix_column_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip columns so the first component exceeding a relative threshold is
    positive; deterministic across equivalent sign choices."""
    out = vectors.copy()
    for k in range(out.shape[1]):
        col = out[:, k]
        scale = np.max(np.abs(col))
        nz = np.nonzero(np.abs(col) > 1e-12 * scale)[0]
        if nz.size and col[nz[0]] < 0.0:
            out[:, k] = -col
    return out


def symmetric_eigendecompose(matrix: np.ndarray) -> SpectralDecomposition:
    """Full eigendecomposition of a symmetric matrix (LAPACK symmetric
    solver), eigenvalues ascending, columns sign-normalized."""
    mat = np.asarray(matrix, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    if not np.array_equal(mat, mat.T):
        raise ValueError("matrix must be exactly symmetric")
    vals, vecs = np.linalg.eigh(mat)
    return SpectralDecomposition(eigenvalues=vals, eigenvectors=_fix_column_signs(vecs))


def closed_form_spectrum(params: EnsembleParams) -> np.ndarray:
    """Eigenvalues lambda_k = 2k(2n + alpha + beta + 1 - k), ascending in k."""
    n = params.n
    k = np.arange(1, n + 1, dtype=float)
    return 2.0 * k * (2.0 * n + params.alpha + params.beta + 1.0 - k)


def build_discrete_op_basis(freeze: FreezePoint) -> DiscreteOPBasis:
    """Stieltjes procedure on the weighted freezing-point nodes.

    Produces exactly n orthonormal polynomials; breakdown (a vanishing norm)
    cannot occur for distinct nodes with positive weights and therefore
    raises, signalling corrupted input.
    """
    z = freeze.zeros
    w = (1.0 - z) * (1.0 + z)
    n = z.size

    values = np.empty((n, n))
    diag = np.zeros(n)
    offdiag = np.zeros(max(n - 1, 0))

    norm0 = float(np.sum(w))
    q_prev = np.zeros(n)
    q = np.full(n, 1.0 / math.sqrt(norm0))
    values[:, 0] = q
    for k in range(n - 1):
        diag[k] = float(np.sum(w * z * q * q))
        r = (z - diag[k]) * q - (offdiag[k - 1] * q_prev if k > 0 else 0.0)
        norm_sq = float(np.sum(w * r * r))
        if norm_sq <= STIELTJES_BREAKDOWN_TOL:
            raise ArithmeticError(
                f"Stieltjes breakdown at degree {k + 1}: norm^2 = {norm_sq:.3e}"
            )
        offdiag[k] = math.sqrt(norm_sq)
        q_prev, q = q, r / offdiag[k]
        values[:, k + 1] = q
    if n >= 1:
        diag[n - 1] = float(np.sum(w * z * q * q))
    return DiscreteOPBasis(nodes=z, weights=w, diag=diag, offdiag=offdiag, values=values)


@dataclass(frozen=True)
class EigenvectorCheck:
    """Comparison of one constructed eigenvector against the numerical one."""

    k: int
    eigenvalue: float
    residual: float
    cosine: float


def verify_eigenvectors(
    trig: PrecisionMatrix, basis: DiscreteOPBasis
) -> list[EigenvectorCheck]:
    """Check that u_k = (q_{k-1}(z_j) sqrt(1 - z_j^2))_j is an eigenvector of
    the trigonometric precision matrix for eigenvalue lambda_k.

    Returns, per k, the eigen-residual ||M u_k - lambda_k u_k|| of the unit
    constructed vector and its |cosine| against the numerically computed
    eigenvector.
    """
    if trig.coords is not Coordinates.TRIGONOMETRIC:
        raise ValueError("eigenvector structure applies to the trigonometric matrix")
    mat = trig.entries
    lam = closed_form_spectrum(trig.freeze.params)
    decomp = symmetric_eigendecompose(mat)
    sqrt_w = np.sqrt(basis.weights)

    reports = []
    for k in range(trig.n):
        u = basis.values[:, k] * sqrt_w
        u = u / np.linalg.norm(u)
        u = _fix_column_signs(u[:, None])[:, 0]
        residual = float(np.linalg.norm(mat @ u - lam[k] * u))
        cosine = float(abs(np.dot(u, decomp.eigenvectors[:, k])))
        reports.append(
            EigenvectorCheck(k=k + 1, eigenvalue=float(lam[k]), residual=residual, cosine=cosine)
        )
    return reports


def _log_det_cholesky(matrix: np.ndarray) -> float:
    chol = np.linalg.cholesky(matrix)
    return float(2.0 * np.sum(np.log(np.diag(chol))))


def determinant_algebraic(
    params: EnsembleParams, freeze: FreezePoint | None = None
) -> tuple[float, float]:
    """(closed-form, numerical) log-determinant of the algebraic precision
    matrix; the closed form is

        det = n! / 2^(3n) * ((n+alpha+beta+1)_n)^3 / ((alpha+1)_n (beta+1)_n).
    """
    n, alpha, beta = params.n, params.alpha, params.beta
    closed = (
        log_gamma(n + 1.0)
        - 3.0 * n * math.log(2.0)
        + 3.0 * log_pochhammer(n + alpha + beta + 1.0, n)
        - log_pochhammer(alpha + 1.0, n)
        - log_pochhammer(beta + 1.0, n)
    )
    fp = freeze if freeze is not None else freeze_point(params)
    numerical = _log_det_cholesky(build_algebraic(fp).entries)
    return closed, numerical


def determinant_trigonometric(
    params: EnsembleParams, freeze: FreezePoint | None = None
) -> tuple[float, float]:
    """(closed-form, numerical) log-determinant of the trigonometric
    precision matrix; det = 2^n * n! * (n+alpha+beta+1)_n, which also equals
    the product of the closed-form eigenvalues."""
    n = params.n
    closed = (
        n * math.log(2.0)
        + log_gamma(n + 1.0)
        + log_pochhammer(n + params.alpha + params.beta + 1.0, n)
    )
    fp = freeze if freeze is not None else freeze_point(params)
    numerical = _log_det_cholesky(build_trigonometric(fp).entries)
    return closed, numerical
