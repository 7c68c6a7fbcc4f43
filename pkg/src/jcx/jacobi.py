"""Jacobi polynomials on [-1, 1] for the weight (1-x)^alpha (1+x)^beta.

Evaluation goes through a three-term recurrence whose iterates are rescaled
whenever they exceed 1e100, with the accumulated scale tracked in log space.
That keeps everything usable up to alpha, beta ~ 1e4 and n ~ 500, where both
the normalization constant and the polynomial values overflow doubles.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from .errors import DomainError, PolynomialOverflowError
from .specfun import log_beta, log_gamma

_RESCALE_LIMIT = 1e100
_MAX_EXP_ARG = 709.0  # exp() overflows just above this


@dataclass(frozen=True)
class PolyParams:
    """Degree and weight exponents identifying one Jacobi polynomial."""

    n: int
    alpha: float
    beta: float

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise DomainError(f"degree must be a non-negative integer, got {self.n}")
        if not self.alpha > -1.0:
            raise DomainError(f"alpha must exceed -1, got {self.alpha}")
        if not self.beta > -1.0:
            raise DomainError(f"beta must exceed -1, got {self.beta}")

    def swapped(self) -> "PolyParams":
        """Parameters of the x -> -x reflected polynomial."""
        return PolyParams(self.n, self.beta, self.alpha)


def log_norm_constant(params: PolyParams) -> float:
    """ln of the squared weighted L2 norm of the classical polynomial.

    At n = 0 the factor (a+b+1) Gamma(a+b+1) is folded into Gamma(a+b+2):
    the unfolded form breaks down for a+b <= -1 even though the constant
    itself is perfectly finite there.
    """
    n, a, b = params.n, params.alpha, params.beta
    if n == 0:
        return (a + b + 1.0) * math.log(2.0) + log_beta(a + 1.0, b + 1.0)
    return (
        (a + b + 1.0) * math.log(2.0)
        + log_gamma(a + n + 1.0)
        + log_gamma(b + n + 1.0)
        - log_gamma(n + 1.0)
        - math.log(a + b + 2.0 * n + 1.0)
        - log_gamma(a + b + n + 1.0)
    )


def norm_constant(params: PolyParams) -> float:
    """Squared weighted L2 norm of the classical polynomial.

    Computed in log space and exponentiated once; raises if the value does
    not fit in a double (use :func:`log_norm_constant` in that regime).
    """
    lk = log_norm_constant(params)
    if lk > _MAX_EXP_ARG:
        raise PolynomialOverflowError(
            f"norm constant for {params} exceeds double range (ln = {lk:.3g})"
        )
    return math.exp(lk)


def _eval_scaled(n: int, alpha: float, beta: float, x: np.ndarray):
    """Classical P_n at x as (mantissa, log_scale); value = mantissa * exp(log_scale).

    Iterates are renormalized per element once they pass 1e100, so the pair
    stays finite for any representable outcome.
    """
    x = np.asarray(x, dtype=float)
    logs = np.zeros_like(x)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev, logs
    p = 0.5 * (alpha + beta + 2.0) * x + 0.5 * (alpha - beta)
    for k in range(2, n + 1):
        s = 2.0 * k + alpha + beta
        c1 = 2.0 * k * (k + alpha + beta) * (s - 2.0)
        c2 = (s - 1.0) * (alpha * alpha - beta * beta)
        c3 = (s - 2.0) * (s - 1.0) * s
        c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s
        p, p_prev = ((c2 + c3 * x) * p - c4 * p_prev) / c1, p
        big = np.abs(p) > _RESCALE_LIMIT
        if np.any(big):
            scale = np.where(big, np.abs(p), 1.0)
            p = p / scale
            p_prev = p_prev / scale
            logs = logs + np.log(scale)
    return p, logs


def _derivative_scaled(n: int, alpha: float, beta: float, x: np.ndarray):
    """d/dx P_n as (mantissa, log_scale), via the shifted-parameter identity."""
    x = np.asarray(x, dtype=float)
    if n == 0:
        return np.zeros_like(x), np.full_like(x, -np.inf)
    mant, logs = _eval_scaled(n - 1, alpha + 1.0, beta + 1.0, x)
    return mant, logs + math.log(0.5 * (n + alpha + beta + 1.0))


def _collapse(mant: np.ndarray, logs: np.ndarray, scalar: bool):
    with np.errstate(over="raise"):
        try:
            value = mant * np.exp(logs)
        except FloatingPointError:
            raise PolynomialOverflowError(
                "polynomial value exceeds double range; use the scaled evaluation"
            ) from None
    if not np.all(np.isfinite(value)):
        raise PolynomialOverflowError(
            "polynomial value exceeds double range; use the scaled evaluation"
        )
    return float(value) if scalar else value


def eval_classical(params: PolyParams, x) -> float | np.ndarray:
    """Classical (orthogonal, unnormalized) P_n at x."""
    scalar = np.isscalar(x)
    mant, logs = _eval_scaled(params.n, params.alpha, params.beta, x)
    return _collapse(mant, logs, scalar)


def eval_orthonormal(params: PolyParams, x) -> float | np.ndarray:
    """Orthonormal polynomial P_n / sqrt(norm constant) at x.

    The division happens inside the log scale, so intermediate magnitudes
    stay bounded even when P_n and the norm constant both overflow.
    """
    scalar = np.isscalar(x)
    mant, logs = _eval_scaled(params.n, params.alpha, params.beta, x)
    return _collapse(mant, logs - 0.5 * log_norm_constant(params), scalar)


def eval_derivative(params: PolyParams, x) -> float | np.ndarray:
    """Derivative of the classical polynomial at x."""
    scalar = np.isscalar(x)
    mant, logs = _derivative_scaled(params.n, params.alpha, params.beta, x)
    if params.n == 0:
        return 0.0 if scalar else np.zeros_like(np.asarray(x, dtype=float))
    return _collapse(mant, logs, scalar)


def recurrence_bands(alpha: float, beta: float, m: int):
    """Diagonal and off-diagonal of the m x m symmetric recurrence matrix.

    The k=0 diagonal and k=1 off-diagonal use explicitly cancelled forms:
    the generic expressions have removable 0/0 there when alpha + beta is
    0 or -1.
    """
    a, b = float(alpha), float(beta)
    k = np.arange(m, dtype=float)
    s = 2.0 * k + a + b
    diag = np.empty(m)
    diag[0] = (b - a) / (a + b + 2.0)
    if m > 1:
        diag[1:] = (b * b - a * a) / (s[1:] * (s[1:] + 2.0))
    off = np.empty(max(m - 1, 0))
    if m > 1:
        off[0] = math.sqrt(
            4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) ** 2 * (3.0 + a + b))
        )
    if m > 2:
        kk = k[2:m]
        ss = s[2:m]
        off[1:] = np.sqrt(
            4.0 * kk * (kk + a) * (kk + b) * (kk + a + b)
            / (ss * ss * (ss * ss - 1.0))
        )
    return diag, off


def zeros(params: PolyParams) -> np.ndarray:
    """The n real zeros, strictly increasing inside (-1, 1).

    Eigenvalues of the symmetric tridiagonal recurrence matrix, then one
    Newton step through the scaled evaluations to recover full precision.
    """
    n = params.n
    if n == 0:
        return np.empty(0)
    diag, off = recurrence_bands(params.alpha, params.beta, n)
    if n == 1:
        z = diag.copy()
    else:
        z = eigvalsh_tridiagonal(diag, off)
    pm, pl = _eval_scaled(n, params.alpha, params.beta, z)
    dm, dl = _derivative_scaled(n, params.alpha, params.beta, z)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        step = (pm / dm) * np.exp(pl - dl)
    ok = np.isfinite(step)
    polished = np.where(ok, z - step, z)
    inside = (polished > -1.0) & (polished < 1.0)
    polished = np.where(inside, polished, z)
    return np.sort(polished)


def log_weight(alpha: float, beta: float, x: np.ndarray) -> np.ndarray:
    """ln[(1-x)^alpha (1+x)^beta], with exact-zero exponents short-circuited."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    with np.errstate(divide="ignore"):
        if alpha != 0.0:
            out = out + alpha * np.log1p(-x)
        if beta != 0.0:
            out = out + beta * np.log1p(x)
    return out


def rakhmanov_density(params: PolyParams, x) -> float | np.ndarray:
    """Probability density [orthonormal P_n]^2 (1-x)^alpha (1+x)^beta."""
    scalar = np.isscalar(x)
    xa = np.asarray(x, dtype=float)
    if params.alpha < 0.0 and np.any(xa >= 1.0):
        raise DomainError("density unbounded at x = 1 for alpha < 0")
    if params.beta < 0.0 and np.any(xa <= -1.0):
        raise DomainError("density unbounded at x = -1 for beta < 0")
    if np.any(xa > 1.0) or np.any(xa < -1.0):
        raise DomainError("density is supported on [-1, 1]")
    mant, logs = _eval_scaled(params.n, params.alpha, params.beta, xa)
    lw = log_weight(params.alpha, params.beta, xa)
    expo = 2.0 * logs - log_norm_constant(params) + lw
    value = mant * mant * np.exp(expo)
    return float(value) if scalar else value
