"""Gauss-Jacobi rules and adaptive integration for singular integrands.

Rules come from the Golub-Welsch eigenproblem of the symmetric recurrence
matrix.  Weights are kept in log space as well as linear space: for weight
exponents of a few hundred the zeroth moment no longer fits in a double,
but log weights stay perfectly usable.

The adaptive route subdivides [-1, 1] at the zeros of a target polynomial
and runs tanh-sinh (double exponential) quadrature on every cell, which
absorbs both the logarithmic interior singularities and algebraic endpoint
singularities with exponents > -1.
"""

import math
import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import eigh_tridiagonal

from . import jacobi
from .errors import BudgetError, DomainError, EvaluationError
from .specfun import log_beta

MAX_RULE_NODES = 4096
DEFAULT_MAX_EVALS = 50_000_000
MAX_EVALS_ENV = "JCX_MAX_EVALS"

_TS_TMAX = 3.5
_TS_MAX_LEVEL = 12
_MERGE_EPS = 1e-13


@dataclass(frozen=True)
class QuadRule:
    """Nodes and weights of an m-point Gauss-Jacobi rule."""

    exp_a: float
    exp_b: float
    order: int
    nodes: np.ndarray
    weights: np.ndarray
    log_weights: np.ndarray


@dataclass(frozen=True)
class IntegralResult:
    value: float
    abs_error_estimate: float
    evaluations: int


def gauss_jacobi_rule(a: float, b: float, m: int, max_nodes: int = MAX_RULE_NODES) -> QuadRule:
    """m-point rule exact for polynomials of degree <= 2m-1 against the weight."""
    if not (a > -1.0 and b > -1.0):
        raise DomainError(f"weight exponents must exceed -1, got ({a}, {b})")
    if not 1 <= m:
        raise DomainError(f"rule order must be positive, got {m}")
    if m > max_nodes:
        raise BudgetError(f"rule order {m} exceeds the node cap {max_nodes}")
    diag, off = jacobi.recurrence_bands(a, b, m)
    if m == 1:
        nodes = diag.copy()
        first_sq = np.ones(1)
    else:
        nodes, vecs = eigh_tridiagonal(diag, off)
        first_sq = vecs[0, :] ** 2
    log_mu0 = (a + b + 1.0) * math.log(2.0) + log_beta(a + 1.0, b + 1.0)
    if a + b + 2.0 <= 170.0:
        # linear route keeps simple moments (e.g. 2 for the unit weight) exact
        mu0 = (
            2.0 ** (a + b + 1.0)
            * math.gamma(a + 1.0) * math.gamma(b + 1.0) / math.gamma(a + b + 2.0)
        )
    else:
        mu0 = math.inf if log_mu0 > 709.0 else math.exp(log_mu0)
    with np.errstate(divide="ignore"):
        log_weights = log_mu0 + np.log(first_sq)
    with np.errstate(over="ignore", invalid="ignore"):
        weights = mu0 * first_sq
    return QuadRule(float(a), float(b), int(m), nodes, weights, log_weights)


def _call_integrand(f, xs: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(f(xs), dtype=float)
        if vals.shape != xs.shape:
            raise ValueError
    except (TypeError, ValueError):
        vals = np.array([float(f(x)) for x in xs])
    bad = ~np.isfinite(vals)
    if np.any(bad):
        node = float(xs[np.argmax(bad)])
        raise EvaluationError(f"integrand is not finite at x = {node!r}", node=node)
    return vals


def integrate_weighted(rule: QuadRule, f) -> float:
    """sum_i w_i f(x_i) in ascending node order with exact accumulation."""
    if not np.all(np.isfinite(rule.weights)):
        raise EvaluationError(
            "rule weights exceed double range; integrate through log_weights"
        )
    vals = _call_integrand(f, rule.nodes)
    return math.fsum(rule.weights * vals)


@lru_cache(maxsize=None)
def _ts_points(level: int):
    """Abscissas/weights introduced at a refinement level, ascending in t.

    Returns (u, w) for x = c + r*u; w already includes the Jacobian of the
    tanh-sinh map but not the step h or the half-width r.
    """
    h = _TS_TMAX / 2.0**level
    if level == 0:
        j = np.arange(-1, 2, dtype=float)
    else:
        top = 2.0**level
        odd = np.arange(1.0, top, 2.0)
        j = np.concatenate([-odd[::-1], odd])
    t = j * h
    v = 0.5 * math.pi * np.sinh(t)
    u = np.tanh(v)
    w = 0.5 * math.pi * np.cosh(t) / np.cosh(v) ** 2
    return u, w


class _Budget:
    """Shared integrand-evaluation allowance for one adaptive integral."""

    def __init__(self, limit: int):
        self.limit = int(limit)
        self.used = 0

    def spend(self, k: int) -> bool:
        if self.used + k > self.limit:
            return False
        self.used += k
        return True


def _tanh_sinh_cell(f, lo: float, hi: float, tol: float, budget: _Budget):
    """Integrate f on the open cell (lo, hi).

    Returns (value, error_estimate, status) with status one of "ok",
    "levels", "budget".  Convergence roughly doubles digits per level, so
    d_k^2 / d_{k-1} is the usual extrapolated error proxy.

    Samples whose abscissa rounds onto a cell endpoint are dropped.  The
    discarded tail is gauged per side by geometric extrapolation of the two
    outermost surviving samples (doubled for safety) and added to the
    estimate; for algebraic endpoint exponents approaching -1 that tail
    dominates and honestly degrades the achievable tolerance.
    """
    c = 0.5 * (lo + hi)
    r = 0.5 * (hi - lo)
    total = 0.0
    prev_d = None
    est = math.inf
    tail_gauge = 0.0
    for level in range(_TS_MAX_LEVEL + 1):
        u, w = _ts_points(level)
        x = c + r * u
        inside = (x > lo) & (x < hi)
        if not budget.spend(int(np.count_nonzero(inside))):
            return total, est if math.isfinite(est) else abs(total), "budget"
        contrib = 0.0
        h = _TS_TMAX / 2.0**level
        if np.any(inside):
            vals = _call_integrand(f, x[inside])
            wk = w[inside]
            contrib = math.fsum(wk * vals)
            absw = np.abs(wk * vals)
            tail_gauge = r * h * (
                _side_tail(absw[0], absw[1] if absw.size > 1 else 0.0)
                + _side_tail(absw[-1], absw[-2] if absw.size > 1 else 0.0)
            )
        previous = total
        total = (0.5 * total if level > 0 else 0.0) + h * r * contrib
        if level == 0:
            continue
        d = abs(total - previous)
        if prev_d is not None and prev_d > 0.0 and 0.0 < d <= 0.1 * prev_d:
            # clearly in the double-exponential regime: extrapolate
            est = d * d / prev_d
        else:
            est = d
        prev_d = d
        est += tail_gauge
        if level >= 4 and (est <= tol or (d == 0.0 and tail_gauge <= tol)):
            return total, est, "ok"
    return total, est, "levels"


def _side_tail(outer: float, inner: float) -> float:
    """Geometric bound on the sum of dropped samples beyond one boundary.

    ``outer``/``inner`` are |w f| at the outermost two surviving samples
    (spacing 2h in t, hence the square root for the per-step ratio).
    """
    if outer == 0.0:
        return 0.0
    if inner <= outer:
        ratio = 0.98
    else:
        ratio = min(math.sqrt(outer / inner), 0.98)
    return 2.0 * outer * ratio / (1.0 - ratio)


def _max_evals_default() -> int:
    raw = os.environ.get(MAX_EVALS_ENV)
    if raw is None:
        return DEFAULT_MAX_EVALS
    try:
        return int(float(raw))
    except ValueError:
        raise DomainError(f"{MAX_EVALS_ENV} must be numeric, got {raw!r}") from None


def cell_boundaries(params: jacobi.PolyParams) -> np.ndarray:
    """{-1} U zeros U {+1}, with boundaries closer than 1e-13 merged."""
    pts = np.concatenate([[-1.0], jacobi.zeros(params), [1.0]])
    keep = [pts[0]]
    for p in pts[1:]:
        if p - keep[-1] > _MERGE_EPS:
            keep.append(p)
    keep[-1] = 1.0
    return np.array(keep)


def integrate_log_singular(
    params: jacobi.PolyParams,
    g,
    tol: float,
    max_evals: int | None = None,
) -> IntegralResult:
    """Integrate g over [-1, 1], splitting at the zeros of the polynomial.

    Each cell runs tanh-sinh quadrature capped at level 12; the final
    reduction sums cells in ascending interval order.  A cell that plateaus
    at the level cap is tolerated as long as the summed error estimate still
    meets ``tol``; otherwise (or when the evaluation budget runs out) a
    :class:`BudgetError` carries the best estimate.
    """
    if not tol > 0.0:
        raise DomainError("tolerance must be positive")
    budget = _Budget(max_evals if max_evals is not None else _max_evals_default())
    bounds = cell_boundaries(params)
    ncells = len(bounds) - 1
    cell_tol = tol / ncells
    values = []
    errors = []
    out_of_budget = False
    for i in range(ncells):
        v, e, status = _tanh_sinh_cell(g, float(bounds[i]), float(bounds[i + 1]), cell_tol, budget)
        values.append(v)
        errors.append(e if math.isfinite(e) else abs(v))
        if status == "budget":
            out_of_budget = True
            break
    result = IntegralResult(
        value=math.fsum(values),
        abs_error_estimate=math.fsum(errors),
        evaluations=budget.used,
    )
    if out_of_budget or result.abs_error_estimate > tol:
        reason = "budget" if out_of_budget else "estimate above tolerance at level cap"
        raise BudgetError(
            f"integration did not converge ({reason}) after {budget.used} evaluations "
            f"(limit {budget.limit}, level cap {_TS_MAX_LEVEL}); best estimate attached",
            result=result,
        )
    return result
