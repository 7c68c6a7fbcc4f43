import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jcx.errors import DomainError, PolynomialOverflowError
from jcx.jacobi import (
    PolyParams,
    eval_classical,
    eval_derivative,
    eval_orthonormal,
    log_norm_constant,
    norm_constant,
    rakhmanov_density,
    recurrence_bands,
    zeros,
)
from jcx.quadrature import gauss_jacobi_rule
from jcx.specfun import log_gamma

mpmath.mp.dps = 40

PAIRS = [(0.0, 0.0), (0.5, -0.5), (2.0, 3.0), (3.5, 1.5)]


class TestPolyParams:
    def test_validation(self):
        with pytest.raises(DomainError):
            PolyParams(-1, 0.0, 0.0)
        with pytest.raises(DomainError):
            PolyParams(2, -1.0, 0.0)
        with pytest.raises(DomainError):
            PolyParams(2, 0.0, -1.5)

    def test_swapped(self):
        assert PolyParams(3, 1.0, 2.0).swapped() == PolyParams(3, 2.0, 1.0)


class TestNormConstant:
    def test_trivial(self):
        assert norm_constant(PolyParams(0, 0.0, 0.0)) == pytest.approx(2.0, rel=1e-14)
        assert norm_constant(PolyParams(1, 0.0, 0.0)) == pytest.approx(2.0 / 3.0, rel=1e-14)
        assert norm_constant(PolyParams(0, 1.0, 0.0)) == pytest.approx(2.0, rel=1e-14)

    @pytest.mark.parametrize("n,a,b", [(5, 2.0, 3.0), (120, 0.5, -0.5), (500, 1e4, 1e4)])
    def test_log_against_mpmath(self, n, a, b):
        expected = (
            (a + b + 1) * mpmath.log(2)
            + mpmath.loggamma(a + n + 1)
            + mpmath.loggamma(b + n + 1)
            - mpmath.loggamma(n + 1)
            - mpmath.log(a + b + 2 * n + 1)
            - mpmath.loggamma(a + b + n + 1)
        )
        got = log_norm_constant(PolyParams(n, a, b))
        assert got == pytest.approx(float(expected), rel=1e-13)

    def test_overflow_signaled(self):
        with pytest.raises(PolynomialOverflowError):
            norm_constant(PolyParams(0, 1e4, 0.0))


class TestEvaluation:
    def test_degree_zero(self):
        assert eval_classical(PolyParams(0, 1.3, -0.2), 0.77) == 1.0

    def test_degree_one(self):
        assert eval_classical(PolyParams(1, 0.0, 0.0), 0.5) == pytest.approx(0.5, rel=1e-15)

    def test_degree_two_legendre(self):
        p = PolyParams(2, 0.0, 0.0)
        x = np.array([-1.0, 0.0, 0.3, 1.0])
        assert eval_classical(p, x) == pytest.approx((3 * x**2 - 1) / 2, rel=1e-14)

    @pytest.mark.parametrize("n", [1, 5, 20, 50])
    @pytest.mark.parametrize("a,b", [(0.3, 0.0), (2.0, 1.7), (1000.0, 0.5)])
    def test_endpoint_value(self, n, a, b):
        expected = math.exp(log_gamma(a + n + 1) - log_gamma(n + 1.0) - log_gamma(a + 1))
        assert eval_classical(PolyParams(n, a, b), 1.0) == pytest.approx(expected, rel=1e-12)

    @given(
        n=st.integers(0, 12),
        a=st.floats(-0.9, 6.0),
        b=st.floats(-0.9, 6.0),
        x=st.floats(-1.0, 1.0),
    )
    @settings(max_examples=80, deadline=None)
    def test_reflection_symmetry(self, n, a, b, x):
        lhs = eval_classical(PolyParams(n, a, b), x)
        rhs = (-1.0) ** n * eval_classical(PolyParams(n, b, a), -x)
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-300)

    def test_orthonormal_values(self):
        assert eval_orthonormal(PolyParams(0, 0.0, 0.0), 0.3) == pytest.approx(
            1.0 / math.sqrt(2.0), rel=1e-14
        )
        assert eval_orthonormal(PolyParams(1, 0.0, 0.0), 0.5) == pytest.approx(
            math.sqrt(1.5) * 0.5, rel=1e-14
        )

    def test_orthonormal_survives_huge_parameters(self):
        # classical value and norm constant both overflow; inside the
        # concentration zone the quotient must not
        value = eval_orthonormal(PolyParams(500, 1e4, 1e4), 0.005)
        assert math.isfinite(value)
        with pytest.raises(PolynomialOverflowError):
            eval_classical(PolyParams(500, 1e4, 1e4), 1.0)


class TestOrthonormality:
    @pytest.mark.parametrize("a,b", PAIRS)
    def test_small_grid(self, a, b):
        rule = gauss_jacobi_rule(a, b, 10)
        vals = [eval_orthonormal(PolyParams(n, a, b), rule.nodes) for n in range(9)]
        for n in range(9):
            for m in range(n, 9):
                inner = float(np.dot(rule.weights, vals[n] * vals[m]))
                assert inner == pytest.approx(1.0 if n == m else 0.0, abs=1e-12)


class TestDerivative:
    def test_examples(self):
        assert eval_derivative(PolyParams(0, 1.0, 2.0), 0.4) == 0.0
        assert eval_derivative(PolyParams(1, 0.0, 0.0), -0.8) == pytest.approx(1.0, rel=1e-15)
        assert eval_derivative(PolyParams(2, 0.0, 0.0), 1.0) == pytest.approx(3.0, rel=1e-14)

    @pytest.mark.parametrize("n,a,b", [(3, 0.5, 1.5), (7, 2.0, 3.0)])
    def test_against_central_difference(self, n, a, b):
        p = PolyParams(n, a, b)
        h = 1e-6
        for x in (-0.6, 0.1, 0.8):
            fd = (eval_classical(p, x + h) - eval_classical(p, x - h)) / (2 * h)
            assert eval_derivative(p, x) == pytest.approx(fd, rel=1e-8)


class TestZeros:
    def test_empty_for_degree_zero(self):
        assert zeros(PolyParams(0, 1.0, 1.0)).size == 0

    def test_degree_one(self):
        assert zeros(PolyParams(1, 2.5, 2.5))[0] == pytest.approx(0.0, abs=1e-15)
        a, b = 1.0, 3.0
        assert zeros(PolyParams(1, a, b))[0] == pytest.approx((b - a) / (a + b + 2), rel=1e-14)

    def test_degree_two_legendre(self):
        z = zeros(PolyParams(2, 0.0, 0.0))
        assert z == pytest.approx([-1 / math.sqrt(3), 1 / math.sqrt(3)], rel=1e-14)

    @pytest.mark.parametrize("a,b", [(0.0, 0.0), (2.0, 3.0)])
    def test_interlacing(self, a, b):
        for n in range(1, 26):
            zn = zeros(PolyParams(n, a, b))
            znext = zeros(PolyParams(n + 1, a, b))
            assert np.all(znext[:-1] < zn) and np.all(zn < znext[1:])

    @pytest.mark.parametrize("n,a,b", [(8, 0.5, -0.5), (15, 2.0, 3.0), (25, 0.0, 0.0)])
    def test_residual_scale(self, n, a, b):
        p = PolyParams(n, a, b)
        z = zeros(p)
        assert np.all(z > -1.0) and np.all(z < 1.0)
        assert np.all(np.diff(z) > 0)
        gaps = np.diff(np.concatenate([[-1.0], z, [1.0]]))
        half_gap = 0.5 * np.minimum(gaps[:-1], gaps[1:])
        scale = np.abs(eval_derivative(p, z)) * half_gap
        assert np.all(np.abs(eval_classical(p, z)) <= 1e-10 * scale)


class TestRakhmanovDensity:
    def test_examples(self):
        assert rakhmanov_density(PolyParams(0, 0.0, 0.0), 0.123) == pytest.approx(0.5, rel=1e-14)
        assert rakhmanov_density(PolyParams(1, 0.0, 0.0), 0.0) == pytest.approx(0.0, abs=1e-30)
        assert rakhmanov_density(PolyParams(1, 0.0, 0.0), 1.0) == pytest.approx(1.5, rel=1e-14)

    def test_endpoint_domain_error(self):
        with pytest.raises(DomainError):
            rakhmanov_density(PolyParams(2, -0.5, 0.0), 1.0)
        with pytest.raises(DomainError):
            rakhmanov_density(PolyParams(2, 0.0, -0.5), -1.0)

    @pytest.mark.parametrize("a,b", PAIRS)
    @pytest.mark.parametrize("n", [0, 1, 4, 9])
    def test_normalization(self, n, a, b):
        rule = gauss_jacobi_rule(a, b, n + 1)
        p = PolyParams(n, a, b)
        vals = eval_orthonormal(p, rule.nodes)
        total = float(np.dot(rule.weights, vals * vals))
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_nonnegative(self):
        x = np.linspace(-0.999, 0.999, 501)
        assert np.all(rakhmanov_density(PolyParams(6, 0.5, 2.0), x) >= 0.0)


def test_recurrence_bands_degenerate_sum():
    # alpha + beta = -1 hits the cancelled k=1 off-diagonal form
    diag, off = recurrence_bands(-0.5, -0.5, 4)
    assert np.all(np.isfinite(diag)) and np.all(np.isfinite(off))
    assert diag == pytest.approx(np.zeros(4), abs=1e-15)
    # Chebyshev recurrence: off-diagonals sqrt(1/2), then 1/2
    assert off[0] == pytest.approx(math.sqrt(0.5), rel=1e-14)
    assert off[1:] == pytest.approx([0.5, 0.5], rel=1e-14)
