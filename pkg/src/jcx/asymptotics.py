"""Leading-order predictors for the degree and parameter regimes.

Every predictor is total over its applicability class and raises
:class:`UnsupportedClassError` outside it; nothing extrapolates silently.
Predictions carry a display law, a coefficient when the law is a plain
power/log, and a callable that evaluates the prediction at a sweep point.
"""

import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import UnsupportedClassError
from .measures import fisher_class
from .specfun import digamma, log_gamma

DEGREE = "degree"
ALPHA = "alpha"

_PI_OVER_E = math.pi / math.e
_LOG2 = math.log(2.0)


@dataclass(frozen=True)
class AsymptoticPrediction:
    """One measure's leading-order behavior in one regime."""

    regime: str
    measure: str
    law: str
    coefficient: float | None
    applicability: str
    variant: str | None = None
    _fn: Callable[[float], float] = field(repr=False, compare=False, default=None)

    def predict(self, t: float) -> float:
        """Evaluate the leading term at sweep value t (degree n or alpha)."""
        return self._fn(float(t))


def _power(regime, measure, coeff, exponent, applicability, variant=None):
    sym = "n" if regime == DEGREE else "alpha"
    if exponent == 0:
        law = "constant"
        fn = lambda t, c=coeff: c
    elif exponent == 1:
        law = sym
        fn = lambda t, c=coeff: c * t
    elif exponent == -1:
        law = f"1/{sym}"
        fn = lambda t, c=coeff: c / t
    else:
        law = f"{sym}^{exponent:g}"
        fn = lambda t, c=coeff, e=exponent: c * t**e
    return AsymptoticPrediction(regime, measure, law, coeff, applicability, variant, fn)


def _log(regime, measure, coeff, applicability):
    sym = "n" if regime == DEGREE else "alpha"
    return AsymptoticPrediction(
        regime, measure, f"log({sym})", coeff, applicability, None,
        lambda t, c=coeff: c * math.log(t),
    )


def _require(cond: bool, message: str):
    if not cond:
        raise UnsupportedClassError(message)


def _fisher_branch(alpha: float, beta: float):
    cls = fisher_class(alpha, beta)
    _require(
        cls is not None,
        "requires alpha = beta = 0, or one exponent 0 with the other > 1, "
        f"or both > 1; got ({alpha}, {beta})",
    )
    return cls


# ---------------------------------------------------------------- degree laws

def fisher_degree(alpha: float, beta: float) -> AsymptoticPrediction:
    """Cubic growth coefficient of the Fisher information."""
    kind, a, b = _fisher_branch(alpha, beta)
    if kind == "legendre":
        coeff = 4.0
        where = "alpha = beta = 0"
    elif kind == "edge":
        coeff = 0.5 * (4.0 + 1.0 / (b - 1.0) + 1.0 / (b + 1.0))
        where = "one exponent 0, the other > 1"
    else:
        coeff = (a + b) * (a * b - 1.0) / ((a * a - 1.0) * (b * b - 1.0))
        where = "alpha > 1 and beta > 1"
    return _power(DEGREE, "fisher", coeff, 3, where)


def ccr_degree(alpha: float, beta: float) -> AsymptoticPrediction:
    """Cubic growth coefficient of the Cramer-Rao product."""
    kind, a, b = _fisher_branch(alpha, beta)
    if kind == "legendre":
        coeff = 2.0
        where = "alpha = beta = 0"
    elif kind == "edge":
        coeff = 0.5 * (2.0 + b / (b * b - 1.0))
        where = "one exponent 0, the other > 1"
    else:
        coeff = 0.5 * (a / (a * a - 1.0) + b / (b * b - 1.0))
        where = "alpha > 1 and beta > 1"
    return _power(DEGREE, "ccr", coeff, 3, where)


def cfs_degree(alpha: float, beta: float) -> AsymptoticPrediction:
    """Cubic growth coefficient of the Fisher-Shannon product."""
    f = fisher_degree(alpha, beta)
    coeff = f.coefficient * math.pi / (2.0 * math.e**3)
    return _power(DEGREE, "cfs", coeff, 3, f.applicability)


def ls_degree() -> AsymptoticPrediction:
    """Constant limit of the entropic power; class independent."""
    return _power(DEGREE, "ls", _PI_OVER_E, 0, "any alpha, beta > -1")


def e_degree(alpha: float, beta: float) -> AsymptoticPrediction:
    """Constant limit of the polynomial-entropy functional."""
    value = math.log(math.pi) - 1.0 - (alpha + beta) * _LOG2
    return _power(DEGREE, "e", value, 0, "any alpha, beta > -1")


def i_degree(alpha: float, beta: float) -> AsymptoticPrediction:
    """Constant limit of the weight-entropy functional."""
    return _power(DEGREE, "i", (alpha + beta) * _LOG2, 0, "any alpha, beta > -1")


def _w2_degree_class(alpha: float, beta: float):
    """Class on min(alpha, beta), under the reflection symmetry."""
    m = min(alpha, beta)
    M = max(alpha, beta)
    return m, M


def w2_degree(alpha: float, beta: float) -> AsymptoticPrediction:
    """Degree behavior of the disequilibrium, per the tabulated classes."""
    m, M = _w2_degree_class(alpha, beta)
    if m > 0.0:
        coeff = 3.0 * math.exp(
            (alpha + beta - 2.0) * _LOG2
            + log_gamma(m) + log_gamma(M) - log_gamma(alpha + beta)
        ) / math.pi**2
        return _power(DEGREE, "w2", coeff, 0, "min(alpha, beta) > 0")
    if m == 0.0:
        return _log(DEGREE, "w2", 1.0, "min(alpha, beta) = 0")
    return _power(DEGREE, "w2", 1.0, -2.0 * m, "-1 < min(alpha, beta) < 0")


def clmc_degree(alpha: float, beta: float) -> AsymptoticPrediction:
    """Degree behavior of the LMC product: disequilibrium law times pi/e."""
    w = w2_degree(alpha, beta)
    coeff = w.coefficient * _PI_OVER_E
    m, _ = _w2_degree_class(alpha, beta)
    if m > 0.0:
        return _power(DEGREE, "clmc", coeff, 0, w.applicability)
    if m == 0.0:
        return _log(DEGREE, "clmc", coeff, w.applicability)
    return _power(DEGREE, "clmc", coeff, -2.0 * m, w.applicability)


# ------------------------------------------------------------ parameter laws

def ccr_param(n: int, beta: float) -> AsymptoticPrediction:
    """Constant limit of the Cramer-Rao product as alpha grows."""
    _require(beta > 1.0, f"requires beta > 1, got {beta}")
    value = (
        (1.0 + beta + 2.0 * n * beta)
        * (1.0 + beta + 2.0 * n * (1.0 + n + beta))
        / (beta * beta - 1.0)
    )
    return _power(ALPHA, "ccr", value, 0, "beta > 1")


def f_param(n: int, beta: float) -> AsymptoticPrediction:
    """Quadratic growth coefficient of the Fisher information in alpha."""
    _require(beta > 1.0, f"requires beta > 1, got {beta}")
    coeff = (1.0 + beta + 2.0 * n * beta) / (4.0 * (beta * beta - 1.0))
    return _power(ALPHA, "fisher", coeff, 2, "beta > 1")


def cfs_param(n: int, beta: float) -> AsymptoticPrediction:
    """Constant limit of the Fisher-Shannon product as alpha grows."""
    _require(beta > 1.0, f"requires beta > 1, got {beta}")
    value = (1.0 + beta + 2.0 * n * beta) / (8.0 * math.pi * math.e * (beta * beta - 1.0))
    return _power(ALPHA, "cfs", value, 0, "beta > 1")


def s_param() -> AsymptoticPrediction:
    """Leading entropy decay: S ~ -log(alpha)."""
    return _log(ALPHA, "s", -1.0, "any fixed n, beta > -1")


def ls_param() -> AsymptoticPrediction:
    """Leading entropic-power decay: 1/alpha (constant factor left open)."""
    return _power(ALPHA, "ls", 1.0, -1, "any fixed n, beta > -1")


def e_param(n: int, beta: float) -> AsymptoticPrediction:
    """Leading polynomial-entropy behavior in alpha (grows like alpha log 2)."""
    _require(beta > -1.0, f"requires beta > -1, got {beta}")
    const = log_gamma(1.0 + n + beta) - log_gamma(n + 1.0)

    def fn(alpha: float) -> float:
        return (1.0 + alpha + beta) * _LOG2 + const - (1.0 + beta) * math.log(alpha)

    return AsymptoticPrediction(
        ALPHA, "e", "alpha", _LOG2, "any fixed n, beta > -1", None, fn
    )


def i_param(n: int, beta: float) -> AsymptoticPrediction:
    """Leading weight-entropy behavior in alpha (decays like -alpha log 2)."""
    _require(beta > -1.0, f"requires beta > -1, got {beta}")
    const = 1.0 + 2.0 * n + beta - beta * _LOG2 - beta * digamma(1.0 + n + beta)

    def fn(alpha: float) -> float:
        return -alpha * _LOG2 + const + beta * math.log(alpha)

    return AsymptoticPrediction(
        ALPHA, "i", "alpha", -_LOG2, "any fixed n, beta > -1", None, fn
    )


def _w2_param_coeff(n: int, beta: float, variant: str) -> float:
    if variant not in ("paper", "derived"):
        raise UnsupportedClassError(f"unknown variant {variant!r}")
    gamma_power = 1.0 if variant == "paper" else 2.0
    return math.exp(
        log_gamma(1.0 + 4.0 * n + 2.0 * beta)
        - 2.0 * (1.0 + 2.0 * n + beta) * _LOG2
        - 2.0 * log_gamma(n + 1.0)
        - gamma_power * log_gamma(1.0 + n + beta)
    )


def w2_param(n: int, beta: float, variant: str = "paper") -> AsymptoticPrediction:
    """Linear growth coefficient of the disequilibrium in alpha.

    ``variant="derived"`` squares the Gamma(1+n+beta) denominator factor,
    the correction suggested by re-deriving the limit; the default keeps
    the published form.  The two differ by Gamma(1+n+beta), so sweeps can
    tell them apart.
    """
    _require(beta > -1.0, f"requires beta > -1, got {beta}")
    coeff = _w2_param_coeff(n, beta, variant)
    return _power(ALPHA, "w2", coeff, 1, "beta > -1", variant)


def clmc_param(n: int, beta: float, variant: str = "paper") -> AsymptoticPrediction:
    """Constant limit of the LMC product as alpha grows (same variants)."""
    _require(beta > -1.0, f"requires beta > -1, got {beta}")
    value = _w2_param_coeff(n, beta, variant)
    return _power(ALPHA, "clmc", value, 0, "beta > -1", variant)


def np_param(n: int, beta: float, p: float) -> AsymptoticPrediction:
    """Gamma-ratio predictor for the p-norm of the classical polynomial."""
    _require(p > 0.0, f"requires p > 0, got {p}")
    _require(beta > -1.0, f"requires beta > -1, got {beta}")
    base = log_gamma(1.0 + n * p + beta) - log_gamma(n + 1.0)

    def fn(alpha: float) -> float:
        return math.exp(
            base
            + log_gamma(alpha + n + 1.0)
            - log_gamma(2.0 + alpha + n * p + beta)
            + (1.0 + alpha + beta) * _LOG2
        )

    return AsymptoticPrediction(
        ALPHA, "np", "gamma-ratio(alpha)", None, "p > 0, beta > -1", None, fn
    )


def entropy_alpha_constant(n: int, beta: float) -> float:
    """The bounded part of S + log(alpha) implied by the two entropy pieces."""
    return (
        _LOG2
        + log_gamma(1.0 + n + beta)
        - log_gamma(n + 1.0)
        + 1.0
        + 2.0 * n
        + beta
        - beta * digamma(1.0 + n + beta)
    )
