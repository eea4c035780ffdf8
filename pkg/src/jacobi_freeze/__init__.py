"""Freezing-regime limits of beta-Jacobi eigenvalue ensembles.

Library for the deterministic kappa -> infinity limit of the beta-Jacobi
eigenvalue distributions: freeze points (Jacobi-polynomial zeros), the
precision matrices of the Gaussian fluctuation limits in algebraic and
trigonometric coordinates, their exact spectra and determinants, Selberg
normalization asymptotics, Hermite/Laguerre degenerations, and a seeded
Metropolis sampler for empirical verification at finite kappa.
"""

__version__ = "0.1.0"

from .freeze import (
    FreezePoint,
    compute_zeros,
    freeze_point,
    log_objective_closed_form,
    log_objective_direct,
    log_products,
    stationarity_residual,
)
from .limits import (
    HermiteLimit,
    LaguerreLimit,
    build_hermite_limit,
    build_laguerre_limit,
    hermite_convergence,
    laguerre_convergence,
)
from .normalization import (
    NormalizationReport,
    log_fluctuation_prefactor,
    log_fluctuation_prefactor_limit,
    log_selberg_constant,
    normalization_report,
)
from .params import EnsembleParams
from .precision import (
    Coordinates,
    PrecisionMatrix,
    build_algebraic,
    build_trigonometric,
    cross_relation_residual,
    invert_to_covariance,
)
from .sampler import (
    BatchStatistics,
    SampleBatch,
    SamplerConfig,
    batch_statistics,
    lag_one_autocorrelation,
    sample_mcmc,
    to_trigonometric,
    write_csv,
)
from .special import (
    JacobiRecurrence,
    jacobi_deriv,
    jacobi_eval,
    jacobi_recurrence,
    log_gamma,
    log_pochhammer,
)
from .spectral import (
    DiscreteOPBasis,
    SpectralDecomposition,
    build_discrete_op_basis,
    closed_form_spectrum,
    determinant_algebraic,
    determinant_trigonometric,
    symmetric_eigendecompose,
    verify_eigenvectors,
)

__all__ = [
    "__version__",
    "EnsembleParams",
    "FreezePoint",
    "compute_zeros",
    "freeze_point",
    "stationarity_residual",
    "log_objective_direct",
    "log_objective_closed_form",
    "log_products",
    "Coordinates",
    "PrecisionMatrix",
    "build_algebraic",
    "build_trigonometric",
    "cross_relation_residual",
    "invert_to_covariance",
    "SpectralDecomposition",
    "DiscreteOPBasis",
    "symmetric_eigendecompose",
    "closed_form_spectrum",
    "build_discrete_op_basis",
    "verify_eigenvectors",
    "determinant_algebraic",
    "determinant_trigonometric",
    "NormalizationReport",
    "log_selberg_constant",
    "log_fluctuation_prefactor",
    "log_fluctuation_prefactor_limit",
    "normalization_report",
    "SamplerConfig",
    "SampleBatch",
    "BatchStatistics",
    "sample_mcmc",
    "to_trigonometric",
    "batch_statistics",
    "lag_one_autocorrelation",
    "write_csv",
    "HermiteLimit",
    "LaguerreLimit",
    "build_hermite_limit",
    "build_laguerre_limit",
    "hermite_convergence",
    "laguerre_convergence",
    "JacobiRecurrence",
    "jacobi_eval",
    "jacobi_deriv",
    "jacobi_recurrence",
    "log_gamma",
    "log_pochhammer",
]
