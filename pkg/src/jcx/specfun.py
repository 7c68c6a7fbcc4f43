"""Scalar special functions backing every closed form in the package.

Self-contained double precision: log-gamma and digamma use a Stirling tail
after an upward recurrence shift, the beta function lives in log space, and
the Gauss hypergeometric evaluator is pinned to unit argument -1 (the only
region the closed forms need).
"""

import math

from .errors import DomainError

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# B_{2k} / (2k (2k-1)) for k = 1..8; tail of ln Gamma at the shifted argument.
_LGAMMA_TAIL = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)

# B_{2k} / (2k) for k = 1..7; tail of psi at the shifted argument.
_DIGAMMA_TAIL = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)

_SHIFT_CUTOFF = 12.0


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    if x == 1.0 or x == 2.0:
        return 0.0
    shift = 0.0
    y = float(x)
    while y < _SHIFT_CUTOFF:
        shift += math.log(y)
        y += 1.0
    z = 1.0 / (y * y)
    tail = 0.0
    for c in reversed(_LGAMMA_TAIL):
        tail = tail * z + c
    tail /= y
    return (y - 0.5) * math.log(y) - y + _HALF_LOG_TWO_PI + tail - shift


def digamma(x: float) -> float:
    """psi(x) = d/dx ln Gamma(x) for x > 0."""
    if not x > 0.0:
        raise DomainError(f"digamma requires x > 0, got {x}")
    shift = 0.0
    y = float(x)
    while y < _SHIFT_CUTOFF:
        shift += 1.0 / y
        y += 1.0
    z = 1.0 / (y * y)
    tail = 0.0
    for c in reversed(_DIGAMMA_TAIL):
        tail = (tail + c) * z
    return math.log(y) - 0.5 / y - tail - shift


def log_beta(a: float, b: float) -> float:
    """ln B(a, b) for a, b > 0."""
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b)


def pochhammer(x: float, k: int) -> float:
    """Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1."""
    if k < 0:
        raise DomainError("pochhammer requires k >= 0")
    out = 1.0
    for j in range(k):
        out *= x + j
    return out


def _is_nonpositive_int(x: float) -> bool:
    return x <= 0.0 and x == round(x)


# Direct-summation cap before acceleration takes over, and the fixed number
# of accelerated terms (error ~ (3+sqrt 8)^-N for totally monotone tails).
_DIRECT_CAP = 100_000
_ACCEL_TERMS = 30


def _alternating_tail(b: float, c: float) -> float:
    """sum_{j>=0} (-1)^j (b)_j / (c)_j for 0 < b < c, accelerated."""
    a = 1.0
    terms = []
    for j in range(_ACCEL_TERMS):
        terms.append(a)
        a *= (b + j) / (c + j)
    d = (3.0 + math.sqrt(8.0)) ** _ACCEL_TERMS
    d = (d + 1.0 / d) / 2.0
    bb = -1.0
    cc = -d
    s = 0.0
    for k in range(_ACCEL_TERMS):
        cc = bb - cc
        s += cc * terms[k]
        bb *= (k + _ACCEL_TERMS) * (k - _ACCEL_TERMS) / ((k + 0.5) * (k + 1.0))
    return s / d


def hyp2f1_at_neg1(b: float, c: float) -> float:
    """2F1(1, b; c; -1) = sum_{k>=0} (b)_k / (c)_k (-1)^k.

    Terminates exactly when b is a non-positive integer; otherwise the
    series converges iff c - b > 0.  Leading terms (at most ``_DIRECT_CAP``)
    are summed directly until both Pochhammer arguments turn positive, after
    which the alternating tail is a Hausdorff moment sequence and is summed
    with Chebyshev-polynomial acceleration to ~1e-15 absolute.
    """
    b = float(b)
    c = float(c)
    if _is_nonpositive_int(c) and not (_is_nonpositive_int(b) and -b < 1 - c):
        raise DomainError(f"2F1(1,{b};{c};-1): pole in the denominator parameters")
    if _is_nonpositive_int(b):
        m = int(round(-b))
        term = 1.0
        parts = [term]
        for k in range(1, m + 1):
            term *= -(b + k - 1) / (c + k - 1)
            parts.append(term)
        return math.fsum(parts)
    if not c - b > 0.0:
        raise DomainError(f"2F1(1,{b};{c};-1) diverges: requires c - b > 0")

    k0 = 0
    if b <= 0.0 or c <= 0.0:
        k0 = int(math.floor(max(0.0, -b, -c))) + 1
    if k0 > _DIRECT_CAP:
        raise DomainError(f"2F1(1,{b};{c};-1): parameters need more than {_DIRECT_CAP} direct terms")
    term = 1.0
    head = []
    for k in range(k0):
        head.append(term)
        term *= -(b + k) / (c + k)
    # term now equals (-1)^k0 (b)_k0 / (c)_k0
    tail = term * _alternating_tail(b + k0, c + k0)
    return math.fsum(head) + tail
