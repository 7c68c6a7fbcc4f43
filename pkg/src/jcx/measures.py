"""Spreading and complexity measures of the Jacobi Rakhmanov density.

Closed forms where they exist (variance, Fisher information branches, the
weight-entropy functional), numeric routes everywhere (singularity-aware
quadrature), and the three complexity products built from stored factors so
the product identities hold bit-exactly.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, JcxError
from .jacobi import (
    PolyParams,
    _derivative_scaled,
    _eval_scaled,
    log_norm_constant,
    log_weight,
    norm_constant,
)
from .quadrature import (
    MAX_RULE_NODES,
    IntegralResult,
    gauss_jacobi_rule,
    integrate_log_singular,
)
from .specfun import digamma

TWO_PI_E = 2.0 * math.pi * math.e


class InfinityMarker:
    """Semantic infinity for divergent measures, distinct from float overflow."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __mul__(self, other):
        return INFINITY

    __rmul__ = __mul__


INFINITY = InfinityMarker()


def is_infinite(value) -> bool:
    return value is INFINITY


def default_tol(n: int) -> float:
    """Default absolute tolerance for the numeric routes at degree n."""
    return 1e-10 if n <= 50 else 1e-8


def variance(params: PolyParams) -> float:
    """Variance of the Rakhmanov density, in closed form.

    The generic two-term expression has removable 0/0 spots at n = 0 (when
    alpha + beta = -1) and n = 1 (when alpha + beta = -1); those use the
    cancelled forms.
    """
    n, a, b = params.n, params.alpha, params.beta
    s = 2.0 * n + a + b
    if n == 0:
        return 4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0) ** 2 * (a + b + 3.0))
    first = (
        4.0 * (n + 1.0) * (n + a + 1.0) * (n + b + 1.0) * (n + a + b + 1.0)
        / ((s + 1.0) * (s + 2.0) ** 2 * (s + 3.0))
    )
    if n == 1:
        second = 4.0 * (1.0 + a) * (1.0 + b) / (s * s * (s + 1.0))
    else:
        second = (
            4.0 * n * (n + a) * (n + b) * (n + a + b)
            / ((s - 1.0) * s * s * (s + 1.0))
        )
    return first + second


def fisher_class(alpha: float, beta: float):
    """Classify exponents by finiteness of the density's Fisher information.

    Returns (kind, a, b) with the reflected case (beta = 0, alpha > 1)
    canonicalized onto the edge branch, or None when the information
    diverges.
    """
    if alpha == 0.0 and beta == 0.0:
        return ("legendre", alpha, beta)
    if alpha == 0.0 and beta > 1.0:
        return ("edge", alpha, beta)
    if beta == 0.0 and alpha > 1.0:
        return ("edge", beta, alpha)
    if alpha > 1.0 and beta > 1.0:
        return ("interior", alpha, beta)
    return None


def fisher_info(params: PolyParams):
    """Fisher information of the density; INFINITY outside the finite classes."""
    n = params.n
    cls = fisher_class(params.alpha, params.beta)
    if cls is None:
        return INFINITY
    kind, a, b = cls
    if kind == "legendre":
        return 2.0 * n * (n + 1.0) * (2.0 * n + 1.0)
    if kind == "edge":
        return 0.25 * (2.0 * n + b + 1.0) * (
            n * n / (b + 1.0)
            + n
            + (4.0 * n + 1.0) * (n + b + 1.0)
            + (n + 1.0) ** 2 / (b - 1.0)
        )
    s = n + a + b
    return (2.0 * n + a + b + 1.0) / (4.0 * (s - 1.0)) * (
        n * (s - 1.0) * ((n + a) / (b + 1.0) + 2.0 + (n + b) / (a + 1.0))
        + (n + 1.0) * s * ((n + a) / (b - 1.0) + 2.0 + (n + b) / (a - 1.0))
    )


def fisher_info_numeric(
    params: PolyParams, tol: float, max_evals: int | None = None
) -> IntegralResult:
    """Fisher information by quadrature of the gradient-content integrand.

    Written as h(x) (2 p' + p w')^2 with p the orthonormal polynomial and
    w' the log-derivative of the weight, which is the algebraic limit form:
    it stays finite at the interior zeros where the density vanishes
    quadratically.
    """
    if fisher_class(params.alpha, params.beta) is None:
        raise DomainError(
            "Fisher information diverges for these exponents; no numeric value"
        )
    n, a, b = params.n, params.alpha, params.beta
    half_lk = 0.5 * log_norm_constant(params)

    def integrand(x):
        x = np.asarray(x, dtype=float)
        pm, pl = _eval_scaled(n, a, b, x)
        pl = pl - half_lk
        dm, dl = _derivative_scaled(n, a, b, x)
        dl = dl - half_lk
        omega = -a / (1.0 - x) + b / (1.0 + x)
        with np.errstate(invalid="ignore"):
            top = np.maximum(dl, pl)
            amp = 2.0 * dm * np.exp(dl - top) + pm * omega * np.exp(pl - top)
        lw = log_weight(a, b, x)
        return np.exp(lw + 2.0 * top) * amp * amp

    return integrate_log_singular(params, integrand, tol, max_evals)


def shannon_I(params: PolyParams) -> float:
    """Entropy contribution of the weight factor, in closed form."""
    n, a, b = params.n, params.alpha, params.beta
    s = 2.0 * n + a + b + 1.0
    return (a + b) * (
        1.0 / s + 2.0 * digamma(s) - digamma(n + a + b + 1.0) - math.log(2.0)
    ) - (a * digamma(n + a + 1.0) + b * digamma(n + b + 1.0))


def shannon_E_numeric(
    params: PolyParams, tol: float, max_evals: int | None = None
) -> IntegralResult:
    """Entropy contribution of the polynomial factor, by quadrature.

    The integrand -rho ln(p^2) has logarithmic singularities exactly at the
    zeros of p, where its limit is 0; colliding nodes evaluate to 0.
    """
    n, a, b = params.n, params.alpha, params.beta
    half_lk = 0.5 * log_norm_constant(params)

    def integrand(x):
        x = np.asarray(x, dtype=float)
        pm, pl = _eval_scaled(n, a, b, x)
        with np.errstate(divide="ignore"):
            logabs = np.log(np.abs(pm)) + pl - half_lk
        lrho = 2.0 * logabs + log_weight(a, b, x)
        with np.errstate(invalid="ignore"):
            out = -np.exp(lrho) * (2.0 * logabs)
        return np.where(np.isfinite(logabs), out, 0.0)

    return integrate_log_singular(params, integrand, tol, max_evals)


def _shannon_direct(
    params: PolyParams, tol: float, max_evals: int | None = None
) -> IntegralResult:
    """-integral rho ln rho, in one quadrature pass (cross-check route)."""
    n, a, b = params.n, params.alpha, params.beta
    half_lk = 0.5 * log_norm_constant(params)

    def integrand(x):
        x = np.asarray(x, dtype=float)
        pm, pl = _eval_scaled(n, a, b, x)
        with np.errstate(divide="ignore"):
            lrho = 2.0 * (np.log(np.abs(pm)) + pl - half_lk) + log_weight(a, b, x)
        with np.errstate(invalid="ignore"):
            out = -np.exp(lrho) * lrho
        return np.where(np.isfinite(lrho), out, 0.0)

    return integrate_log_singular(params, integrand, tol, max_evals)


def shannon_entropy(
    params: PolyParams,
    tol: float | None = None,
    verify: bool = False,
    max_evals: int | None = None,
) -> float:
    """Differential entropy of the density: polynomial part plus weight part.

    With ``verify=True`` the entropy is recomputed by one direct quadrature
    of -rho ln rho and the two routes must agree within their combined
    error estimates.
    """
    tol = default_tol(params.n) if tol is None else tol
    e_part = shannon_E_numeric(params, tol, max_evals)
    s = e_part.value + shannon_I(params)
    if verify:
        direct = _shannon_direct(params, tol, max_evals)
        allowance = 10.0 * (e_part.abs_error_estimate + direct.abs_error_estimate) + 1e-9
        if abs(s - direct.value) > allowance:
            raise JcxError(
                f"entropy routes disagree: split {s!r} vs direct {direct.value!r} "
                f"(allowance {allowance:.3g})"
            )
    return s


def spreading_length(
    params: PolyParams,
    tol: float | None = None,
    verify: bool = False,
    max_evals: int | None = None,
) -> float:
    """Entropic power exp(S): the effective support length of the density."""
    return math.exp(shannon_entropy(params, tol, verify, max_evals))


def lq_norm(
    params: PolyParams,
    p: float,
    tol: float | None = None,
    max_nodes: int = MAX_RULE_NODES,
) -> float:
    """Weighted p-norm functional of the classical polynomial.

    Even integer p integrates a polynomial and uses an exact Gauss-Jacobi
    rule; any other p goes through the singularity-aware route (the |.|^p
    factor has kinks at the zeros).
    """
    if not p > 0.0:
        raise DomainError(f"norm order must be positive, got {p}")
    n, a, b = params.n, params.alpha, params.beta
    if float(p).is_integer() and int(round(p)) % 2 == 0:
        m = max(1, math.ceil((n * p + 1.0) / 2.0))
        rule = gauss_jacobi_rule(a, b, m, max_nodes=max_nodes)
        pm, pl = _eval_scaled(n, a, b, rule.nodes)
        with np.errstate(divide="ignore"):
            lt = rule.log_weights + p * (np.log(np.abs(pm)) + pl)
        return _exp_sum(lt)
    if tol is None:
        tol = 1e-11 * math.exp(min(log_norm_constant(params), 700.0))

    def integrand(x):
        x = np.asarray(x, dtype=float)
        pm, pl = _eval_scaled(n, a, b, x)
        with np.errstate(divide="ignore"):
            lt = log_weight(a, b, x) + p * (np.log(np.abs(pm)) + pl)
        return np.exp(lt)

    return integrate_log_singular(params, integrand, tol).value


def _exp_sum(log_terms: np.ndarray) -> float:
    """sum exp(t_i), scaled by the peak so intermediate sums stay bounded."""
    top = float(np.max(log_terms))
    if top == -math.inf:
        return 0.0
    total = math.fsum(np.exp(log_terms - top))
    if top > 700.0:
        raise DomainError(f"norm value exceeds double range (ln = {top:.3g})")
    return math.exp(top) * total


def shannon_E_via_norm_derivative(params: PolyParams, step: float) -> float:
    """Central difference 2 (N_{2+h} - N_{2-h}) / (2h) of the norm in its order."""
    if not 1e-5 <= step <= 1e-2:
        raise DomainError(f"difference step must lie in [1e-5, 1e-2], got {step}")
    hi = lq_norm(params, 2.0 + step)
    lo = lq_norm(params, 2.0 - step)
    return 2.0 * (hi - lo) / (2.0 * step)


def shannon_E_from_norms(params: PolyParams, step: float) -> float:
    """Polynomial entropy via the norm derivative, for the orthonormal family.

    The derivative of the norm in its order is the negative of the
    polynomial entropy functional; dividing by the norm constant and adding
    its log converts to the orthonormal normalization.
    """
    k = norm_constant(params)
    return -shannon_E_via_norm_derivative(params, step) / k + math.log(k)


def disequilibrium_w2(params: PolyParams, max_nodes: int = MAX_RULE_NODES) -> float:
    """Second entropic moment of the density, by an exact doubled-weight rule."""
    n, a, b = params.n, params.alpha, params.beta
    if 2.0 * a <= -1.0 or 2.0 * b <= -1.0:
        raise DomainError(
            "disequilibrium integral diverges (doubled exponent leaves the "
            "admissible weight domain); unsupported"
        )
    rule = gauss_jacobi_rule(2.0 * a, 2.0 * b, 2 * n + 1, max_nodes=max_nodes)
    pm, pl = _eval_scaled(n, a, b, rule.nodes)
    with np.errstate(divide="ignore"):
        lt = rule.log_weights + 4.0 * (np.log(np.abs(pm)) + pl - 0.5 * log_norm_constant(params))
    return _exp_sum(lt)


def _product(x, y):
    if is_infinite(x) or is_infinite(y):
        return INFINITY
    return x * y


def cramer_rao(params: PolyParams):
    """Fisher information times variance."""
    return _product(fisher_info(params), variance(params))


def fisher_shannon(params: PolyParams, tol: float | None = None):
    """Fisher information times squared entropic power over 2 pi e."""
    f = fisher_info(params)
    if is_infinite(f):
        return INFINITY
    ls = spreading_length(params, tol)
    return f * ls * ls / TWO_PI_E


def lmc(params: PolyParams, tol: float | None = None) -> float:
    """Disequilibrium times entropic power."""
    return disequilibrium_w2(params) * spreading_length(params, tol)


@dataclass(frozen=True)
class MeasureSet:
    """Every computed measure for one parameter triple.

    The stored complexity products are built from the stored factors, so
    c_cr == fisher * variance (etc.) holds exactly as stored.
    """

    params: PolyParams
    variance: float
    fisher: object
    shannon_e: float
    shannon_i: float
    shannon_s: float
    spreading_length: float
    w2: float
    c_cr: object
    c_fs: object
    c_lmc: float
    lq_norms: dict = field(default_factory=dict)
    error_estimates: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        def num(v):
            return "inf" if is_infinite(v) else v

        return {
            "n": self.params.n,
            "alpha": self.params.alpha,
            "beta": self.params.beta,
            "variance": self.variance,
            "fisher": num(self.fisher),
            "shannon_E": self.shannon_e,
            "shannon_I": self.shannon_i,
            "shannon_S": self.shannon_s,
            "spreading_length": self.spreading_length,
            "w2": self.w2,
            "c_cr": num(self.c_cr),
            "c_fs": num(self.c_fs),
            "c_lmc": self.c_lmc,
            "errors": dict(self.error_estimates),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MeasureSet":
        def num(v):
            return INFINITY if v == "inf" else v

        params = PolyParams(int(data["n"]), float(data["alpha"]), float(data["beta"]))
        return cls(
            params=params,
            variance=data["variance"],
            fisher=num(data["fisher"]),
            shannon_e=data["shannon_E"],
            shannon_i=data["shannon_I"],
            shannon_s=data["shannon_S"],
            spreading_length=data["spreading_length"],
            w2=data["w2"],
            c_cr=num(data["c_cr"]),
            c_fs=num(data["c_fs"]),
            c_lmc=data["c_lmc"],
            lq_norms={2.0: norm_constant(params)},
            error_estimates=dict(data["errors"]),
        )


def measure_set(
    params: PolyParams,
    tol: float | None = None,
    max_evals: int | None = None,
    max_nodes: int = MAX_RULE_NODES,
) -> MeasureSet:
    """Compute the full measure set for one parameter triple."""
    tol = default_tol(params.n) if tol is None else tol
    v = variance(params)
    f = fisher_info(params)
    e_res = shannon_E_numeric(params, tol, max_evals)
    i_val = shannon_I(params)
    s_val = e_res.value + i_val
    ls = math.exp(s_val)
    w2 = disequilibrium_w2(params, max_nodes=max_nodes)
    c_cr = _product(f, v)
    c_fs = INFINITY if is_infinite(f) else f * ls * ls / TWO_PI_E
    c_lmc = w2 * ls
    err_e = e_res.abs_error_estimate
    err_ls = ls * err_e
    errors = {
        "shannon_E": err_e,
        "shannon_S": err_e,
        "spreading_length": err_ls,
        "c_fs": 0.0 if is_infinite(f) else abs(f) * 2.0 * ls * err_ls / TWO_PI_E,
        "c_lmc": w2 * err_ls,
    }
    return MeasureSet(
        params=params,
        variance=v,
        fisher=f,
        shannon_e=e_res.value,
        shannon_i=i_val,
        shannon_s=s_val,
        spreading_length=ls,
        w2=w2,
        c_cr=c_cr,
        c_fs=c_fs,
        c_lmc=c_lmc,
        lq_norms={2.0: norm_constant(params)},
        error_estimates=errors,
    )
