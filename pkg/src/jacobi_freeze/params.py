"""Parameter bookkeeping for beta-Jacobi eigenvalue ensembles."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class EnsembleParams:
    """One beta-Jacobi eigenvalue ensemble on the ordered alcove in [-1, 1]^n.

    The joint density is proportional to

        prod_{i<j} (x_j - x_i)^kappa
        * prod_j (1 - x_j)^(kappa*(a+b)/2 - 1/2) * (1 + x_j)^(kappa*b/2 - 1/2)

    with n the dimension, weight parameters a >= 0 and b > 0, and the
    freezing parameter kappa > 0.  The Jacobi-polynomial indices
    alpha = a + b - 1 and beta = b - 1 are always derived, never set
    independently; a >= 0, b > 0 force alpha > -1 and beta > -1.
    """

    n: int
    a: float
    b: float
    kappa: float = 1.0

    def __post_init__(self) -> None:
        if not isinstance(self.n, int):
            raise ValueError(f"dimension n must be an integer, got {self.n!r}")
        if self.n < 1:
            raise ValueError(f"dimension n must satisfy n >= 1, got {self.n}")
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "kappa", float(self.kappa))
        if not math.isfinite(self.a) or self.a < 0.0:
            raise ValueError(f"parameter a must satisfy a >= 0, got {self.a}")
        if not math.isfinite(self.b) or self.b <= 0.0:
            raise ValueError(f"parameter b must satisfy b > 0, got {self.b}")
        if not math.isfinite(self.kappa) or self.kappa <= 0.0:
            raise ValueError(f"parameter kappa must satisfy kappa > 0, got {self.kappa}")

    @property
    def alpha(self) -> float:
        return self.a + self.b - 1.0

    @property
    def beta(self) -> float:
        return self.b - 1.0
