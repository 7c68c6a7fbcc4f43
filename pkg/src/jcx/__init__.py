"""Spreading and complexity measures of orthonormal Jacobi polynomials."""

from .errors import (
    BudgetError,
    DomainError,
    EvaluationError,
    JcxError,
    PolynomialOverflowError,
    UnsupportedClassError,
)
from .jacobi import (
    PolyParams,
    eval_classical,
    eval_derivative,
    eval_orthonormal,
    log_norm_constant,
    norm_constant,
    rakhmanov_density,
    zeros,
)
from .measures import (
    INFINITY,
    MeasureSet,
    cramer_rao,
    default_tol,
    disequilibrium_w2,
    fisher_info,
    fisher_info_numeric,
    fisher_shannon,
    is_infinite,
    lmc,
    lq_norm,
    measure_set,
    shannon_E_numeric,
    shannon_E_from_norms,
    shannon_E_via_norm_derivative,
    shannon_I,
    shannon_entropy,
    spreading_length,
    variance,
)
from .quadrature import (
    IntegralResult,
    QuadRule,
    gauss_jacobi_rule,
    integrate_log_singular,
    integrate_weighted,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "DomainError",
    "EvaluationError",
    "INFINITY",
    "IntegralResult",
    "JcxError",
    "MeasureSet",
    "PolyParams",
    "PolynomialOverflowError",
    "QuadRule",
    "UnsupportedClassError",
    "cramer_rao",
    "default_tol",
    "disequilibrium_w2",
    "eval_classical",
    "eval_derivative",
    "eval_orthonormal",
    "fisher_info",
    "fisher_info_numeric",
    "fisher_shannon",
    "gauss_jacobi_rule",
    "integrate_log_singular",
    "integrate_weighted",
    "is_infinite",
    "lmc",
    "log_norm_constant",
    "lq_norm",
    "measure_set",
    "norm_constant",
    "rakhmanov_density",
    "shannon_E_from_norms",
    "shannon_E_numeric",
    "shannon_E_via_norm_derivative",
    "shannon_I",
    "shannon_entropy",
    "spreading_length",
    "variance",
    "zeros",
]
