"""Exception types shared across the package."""


class JcxError(Exception):
    """Base class for all package errors."""


class DomainError(JcxError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class UnsupportedClassError(JcxError):
    """Parameters fall outside the applicability class of an asymptotic law."""


class EvaluationError(JcxError):
    """An integrand returned a non-finite value at a quadrature node."""

    def __init__(self, message: str, node: float | None = None):
        super().__init__(message)
        self.node = node


class BudgetError(JcxError):
    """Numerical budget exhausted.  ``result`` holds the best estimate so far."""

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class PolynomialOverflowError(JcxError, OverflowError):
    """Requested value exceeds double range; use the scaled/log-space API."""
