"""Scalar special-function kernels: Jacobi polynomials, log-Pochhammer, log-gamma.

All downstream products (discriminants, Selberg constants, determinant
identities) are assembled in log space from these kernels; the raw values
overflow double precision long before the parameter ranges of interest do.
"""

from __future__ import annotations

from dataclasses import dataclass

import math
import numpy as np


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0.

    Backed by the C library lgamma, which is accurate to a few ulp, far
    inside the 1e-13 relative tolerance required here.
    """
    if not x > 0.0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def log_pochhammer(x: float, n: int) -> float:
    """log of the rising factorial (x)_n = x (x+1) ... (x+n-1), x > 0.

    Computed as an exact sum of logs rather than a difference of two
    log-gammas, so there is no cancellation for large arguments.
    """
    if not x > 0.0:
        raise ValueError(f"log_pochhammer requires x > 0, got {x}")
    if n < 0:
        raise ValueError(f"log_pochhammer requires n >= 0, got {n}")
    return float(sum(math.log(x + j) for j in range(n)))


def _check_jacobi_indices(alpha: float, beta: float) -> None:
    if not (alpha > -1.0 and beta > -1.0):
        raise ValueError(
            f"Jacobi indices must satisfy alpha > -1 and beta > -1, "
            f"got alpha={alpha}, beta={beta}"
        )


def jacobi_eval(n: int, alpha: float, beta: float, x):
    """Evaluate the Jacobi polynomial P_n^(alpha,beta) at x.

    Classical normalization, fixed by P_n^(alpha,beta)(1) = binom(n+alpha, n).
    Forward three-term recurrence; `x` may be a scalar or an array.
    """
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    _check_jacobi_indices(alpha, beta)
    xs = np.asarray(x, dtype=float)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)

    p_prev = np.ones_like(xs)
    if n == 0:
        return float(p_prev[0]) if scalar else p_prev
    p = 0.5 * ((alpha + beta + 2.0) * xs + (alpha - beta))
    for m in range(2, n + 1):
        s = 2.0 * m + alpha + beta
        c0 = 2.0 * m * (m + alpha + beta) * (s - 2.0)
        c1 = (s - 1.0) * (s * (s - 2.0) * xs + alpha * alpha - beta * beta)
        c2 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * s
        p, p_prev = (c1 * p - c2 * p_prev) / c0, p
    return float(p[0]) if scalar else p


def jacobi_deriv(n: int, alpha: float, beta: float, x):
    """First derivative of P_n^(alpha,beta), via the index-shift identity

    d/dx P_n^(alpha,beta)(x) = (n+alpha+beta+1)/2 * P_{n-1}^(alpha+1,beta+1)(x).
    """
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    _check_jacobi_indices(alpha, beta)
    if n == 0:
        xs = np.asarray(x, dtype=float)
        return 0.0 if xs.ndim == 0 else np.zeros_like(xs)
    factor = 0.5 * (n + alpha + beta + 1.0)
    return factor * jacobi_eval(n - 1, alpha + 1.0, beta + 1.0, x)


@dataclass(frozen=True)
class JacobiRecurrence:
    """Symmetrized monic three-term recurrence of degree-n Jacobi polynomials.

    `diag` holds the n recurrence centers a_k, `offdiag` the n-1 positive
    couplings sqrt(b_k); the eigenvalues of the corresponding symmetric
    tridiagonal matrix are the zeros of P_n^(alpha,beta) (Golub-Welsch).
    """

    n: int
    alpha: float
    beta: float
    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self) -> None:
        if self.offdiag.size and not np.all(self.offdiag > 0.0):
            raise ValueError("off-diagonal recurrence coefficients must be positive")


def jacobi_recurrence(n: int, alpha: float, beta: float) -> JacobiRecurrence:
    """Monic Jacobi recurrence coefficients for degrees 0..n-1.

    x pi_k = pi_{k+1} + a_k pi_k + b_k pi_{k-1}.  The k = 0 and k = 1 entries
    use cancelled forms so that alpha + beta in {-1, 0} stays finite.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    _check_jacobi_indices(alpha, beta)
    ab = alpha + beta
    diag = np.empty(n)
    diag[0] = (beta - alpha) / (ab + 2.0)
    for k in range(1, n):
        diag[k] = (beta * beta - alpha * alpha) / ((2.0 * k + ab) * (2.0 * k + ab + 2.0))
    off = np.empty(n - 1)
    if n > 1:
        off[0] = math.sqrt(
            4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) ** 2 * (ab + 3.0))
        )
    for k in range(2, n):
        num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab)
        den = (2.0 * k + ab) ** 2 * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0)
        off[k - 1] = math.sqrt(num / den)
    return JacobiRecurrence(n=n, alpha=alpha, beta=beta, diag=diag, offdiag=off)
