"""Inverse covariance matrices of the Gaussian fluctuation limits.

Two coordinate frames share one freezing point: the algebraic frame on the
interval alcove, and the trigonometric frame obtained through
x = cos(2t).  Both precision matrices are assembled directly from their
entry formulas; the exact entrywise relation between them is kept as an
independent consistency check rather than used for construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .freeze import FreezePoint


class Coordinates(Enum):
    ALGEBRAIC = "algebraic"
    TRIGONOMETRIC = "trigonometric"


@dataclass(frozen=True)
class PrecisionMatrix:
    """Dense symmetric positive definite inverse covariance matrix."""

    coords: Coordinates
    n: int
    entries: np.ndarray
    freeze: FreezePoint


def _pairwise_inverse_square(z: np.ndarray) -> np.ndarray:
    """Matrix with entries 1/(z_i - z_j)^2 off the diagonal, 0 on it."""
    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, np.inf)
    return 1.0 / diff**2


def build_algebraic(freeze: FreezePoint) -> PrecisionMatrix:
    """Precision matrix of the rescaled fluctuations in interval coordinates:

        s_jj = sum_{l != j} 1/(z_j - z_l)^2
               + (a+b)/2 / (1 - z_j)^2 + b/2 / (1 + z_j)^2,
        s_ij = -1/(z_i - z_j)^2              (i != j).
    """
    z = freeze.zeros
    a, b = freeze.params.a, freeze.params.b
    inv_sq = _pairwise_inverse_square(z)
    mat = -inv_sq
    diag = (
        inv_sq.sum(axis=1)
        + 0.5 * (a + b) / (1.0 - z) ** 2
        + 0.5 * b / (1.0 + z) ** 2
    )
    np.fill_diagonal(mat, diag)
    mat = np.triu(mat) + np.triu(mat, 1).T  # mirrored once: exact symmetry
    return PrecisionMatrix(Coordinates.ALGEBRAIC, z.size, mat, freeze)


def build_trigonometric(freeze: FreezePoint) -> PrecisionMatrix:
    """Precision matrix in the angle coordinates t_j = arccos(z_j)/2:

        s_jj = 4 sum_{l != j} (1 - z_j^2)/(z_j - z_l)^2
               + 2(a+b)(1+z_j)/(1-z_j) + 2b(1-z_j)/(1+z_j),
        s_ij = -4 sqrt((1-z_i^2)(1-z_j^2)) / (z_i - z_j)^2   (i != j).
    """
    z = freeze.zeros
    a, b = freeze.params.a, freeze.params.b
    w = (1.0 - z) * (1.0 + z)
    inv_sq = _pairwise_inverse_square(z)
    sw = np.sqrt(w)
    mat = -4.0 * sw[:, None] * sw[None, :] * inv_sq
    diag = (
        4.0 * w * inv_sq.sum(axis=1)
        + 2.0 * (a + b) * (1.0 + z) / (1.0 - z)
        + 2.0 * b * (1.0 - z) / (1.0 + z)
    )
    np.fill_diagonal(mat, diag)
    mat = np.triu(mat) + np.triu(mat, 1).T
    return PrecisionMatrix(Coordinates.TRIGONOMETRIC, z.size, mat, freeze)


def cross_relation_residual(alg: PrecisionMatrix, trig: PrecisionMatrix) -> float:
    """Max-norm defect of the entrywise change-of-coordinates relation

        s~_ij = 4 sqrt((1-z_i^2)(1-z_j^2)) * s_ij,

    i.e. conjugation by the Jacobian diag(2 sqrt(1-z_j^2)) of x = cos(2t).
    """
    if alg.coords is not Coordinates.ALGEBRAIC or trig.coords is not Coordinates.TRIGONOMETRIC:
        raise ValueError("expected one algebraic and one trigonometric matrix, in that order")
    if alg.n != trig.n:
        raise ValueError(f"dimension mismatch: {alg.n} vs {trig.n}")
    z = alg.freeze.zeros
    sw = np.sqrt((1.0 - z) * (1.0 + z))
    predicted = 4.0 * sw[:, None] * sw[None, :] * alg.entries
    return float(np.max(np.abs(trig.entries - predicted)))


def invert_to_covariance(prec: PrecisionMatrix) -> np.ndarray:
    """Covariance matrix of the Gaussian limit, via Cholesky solve.

    Raises scipy's LinAlgError if the input is not positive definite, which
    signals an upstream construction bug.
    """
    factor = cho_factor(prec.entries, lower=True)
    cov = cho_solve(factor, np.eye(prec.n))
    return 0.5 * (cov + cov.T)
