import math

import pytest

from jcx.asymptotics import (
    ALPHA,
    DEGREE,
    ccr_degree,
    ccr_param,
    cfs_degree,
    cfs_param,
    clmc_degree,
    clmc_param,
    e_degree,
    e_param,
    entropy_alpha_constant,
    f_param,
    fisher_degree,
    i_degree,
    i_param,
    ls_degree,
    ls_param,
    np_param,
    s_param,
    w2_degree,
    w2_param,
)
from jcx.errors import UnsupportedClassError
from jcx.jacobi import PolyParams
from jcx.measures import lq_norm, shannon_E_numeric, shannon_I, variance
from jcx.specfun import log_gamma

PI_E = math.pi / math.e


class TestDegreeRegime:
    def test_ccr_coefficients(self):
        assert ccr_degree(0.0, 0.0).coefficient == 2.0
        assert ccr_degree(3.0, 3.0).coefficient == pytest.approx(3.0 / 8.0, rel=1e-14)
        assert ccr_degree(0.0, 2.0).coefficient == pytest.approx(4.0 / 3.0, rel=1e-14)
        assert ccr_degree(0.0, 2.0).predict(10.0) == pytest.approx(4000.0 / 3.0, rel=1e-14)

    def test_fisher_coefficients(self):
        assert fisher_degree(0.0, 0.0).coefficient == 4.0
        assert fisher_degree(0.0, 2.0).coefficient == pytest.approx(0.5 * (4 + 1 + 1 / 3), rel=1e-14)

    def test_cfs_value(self):
        assert cfs_degree(0.0, 0.0).coefficient == pytest.approx(
            2 * math.pi / math.e**3, rel=1e-14
        )
        # 2 pi / e^3 = 0.3128213764...
        assert cfs_degree(0.0, 0.0).coefficient == pytest.approx(0.3128213764, abs=5e-10)

    def test_ls_value(self):
        pred = ls_degree()
        assert pred.coefficient == pytest.approx(PI_E, rel=1e-15)
        assert pred.law == "constant"
        assert pred.predict(1e9) == pred.coefficient

    def test_entropy_limits(self):
        assert e_degree(2.0, 3.0).coefficient == pytest.approx(
            math.log(math.pi) - 1.0 - 5.0 * math.log(2.0), rel=1e-14
        )
        assert i_degree(2.0, 3.0).coefficient == pytest.approx(5.0 * math.log(2.0), rel=1e-14)
        assert e_degree(0.0, 0.0).coefficient + i_degree(0.0, 0.0).coefficient == pytest.approx(
            math.log(math.pi) - 1.0
        )

    def test_w2_constant_class(self):
        assert w2_degree(2.0, 2.0).coefficient == pytest.approx(2.0 / math.pi**2, rel=1e-13)
        assert w2_degree(2.0, 2.0).law == "constant"

    def test_w2_log_class(self):
        pred = w2_degree(0.0, 0.0)
        assert pred.law == "log(n)"
        assert pred.coefficient == 1.0
        assert pred.predict(math.e) == pytest.approx(1.0)
        # reflection: class keyed on the smaller exponent
        assert w2_degree(2.0, 0.0).law == "log(n)"

    def test_w2_power_class(self):
        pred = w2_degree(3.0, -0.25)
        assert pred.law == "n^0.5"
        assert pred.predict(4.0) == pytest.approx(2.0, rel=1e-14)

    def test_clmc_values(self):
        assert clmc_degree(1.0, 1.0).coefficient == pytest.approx(3.0 / (math.pi * math.e), rel=1e-13)
        assert clmc_degree(2.0, 2.0).coefficient == pytest.approx(2.0 / (math.pi * math.e), rel=1e-13)
        assert clmc_degree(0.0, 5.0).law == "log(n)"
        assert clmc_degree(0.0, 5.0).coefficient == pytest.approx(PI_E, rel=1e-14)

    def test_unsupported_classes(self):
        with pytest.raises(UnsupportedClassError):
            ccr_degree(0.5, 0.5)
        with pytest.raises(UnsupportedClassError):
            fisher_degree(0.0, 1.0)
        with pytest.raises(UnsupportedClassError):
            cfs_degree(2.0, 0.5)


class TestParameterRegime:
    def test_ccr_constants(self):
        assert ccr_param(0, 2.0).coefficient == pytest.approx(3.0, rel=1e-14)
        assert ccr_param(1, 2.0).coefficient == pytest.approx(77.0 / 3.0, rel=1e-14)
        assert ccr_param(0, 3.0).coefficient == pytest.approx(2.0, rel=1e-14)

    def test_fisher_quadratic(self):
        pred = f_param(0, 2.0)
        assert pred.coefficient == pytest.approx(0.25, rel=1e-14)
        assert pred.law == "alpha^2"
        assert pred.predict(100.0) == pytest.approx(2500.0, rel=1e-14)

    def test_cfs_constant(self):
        assert cfs_param(1, 2.0).coefficient == pytest.approx(
            7.0 / (24.0 * math.pi * math.e), rel=1e-14
        )

    def test_entropy_laws(self):
        assert s_param().predict(math.e) == pytest.approx(-1.0, rel=1e-15)
        assert ls_param().predict(50.0) == pytest.approx(0.02, rel=1e-15)

    def test_e_param_tracks_numeric(self):
        alpha = 2048.0
        p = PolyParams(1, alpha, 2.0)
        numeric = shannon_E_numeric(p, 1e-9).value
        assert np_ratio(numeric, e_param(1, 2.0).predict(alpha)) == pytest.approx(1.0, abs=0.01)

    def test_i_param_tracks_closed_form(self):
        alpha = 2048.0
        assert np_ratio(
            shannon_I(PolyParams(1, alpha, 2.0)), i_param(1, 2.0).predict(alpha)
        ) == pytest.approx(1.0, abs=0.01)

    def test_w2_variants(self):
        paper = w2_param(0, 2.0, variant="paper")
        derived = w2_param(0, 2.0, variant="derived")
        assert paper.coefficient == pytest.approx(3.0 / 16.0, rel=1e-13)
        assert derived.coefficient == pytest.approx(3.0 / 32.0, rel=1e-13)
        # the two variants differ by Gamma(1+n+beta)
        assert paper.coefficient / derived.coefficient == pytest.approx(
            math.exp(log_gamma(3.0)), rel=1e-13
        )

    def test_clmc_constant(self):
        assert clmc_param(0, 2.0, variant="paper").coefficient == pytest.approx(
            3.0 / 16.0, rel=1e-13
        )

    def test_np_param_exact_at_degree_zero(self):
        for alpha in (10.0, 100.0, 500.0):
            for order in (0.5, 2.0, 4.0):
                pred = np_param(0, 0.7, order).predict(alpha)
                got = lq_norm(PolyParams(0, alpha, 0.7), order)
                assert got == pytest.approx(pred, rel=1e-10)

    def test_unsupported_classes(self):
        with pytest.raises(UnsupportedClassError):
            ccr_param(2, 1.0)
        with pytest.raises(UnsupportedClassError):
            f_param(0, 0.5)
        with pytest.raises(UnsupportedClassError):
            cfs_param(1, -0.5)
        with pytest.raises(UnsupportedClassError):
            np_param(1, 2.0, -1.0)
        with pytest.raises(UnsupportedClassError):
            w2_param(0, 2.0, variant="bogus")


def np_ratio(a: float, b: float) -> float:
    return a / b


class TestConsistencyIdentities:
    PAIRS = [(0.0, 0.0), (0.0, 2.0), (0.0, 5.5), (2.0, 3.0), (1.5, 1.5), (4.0, 7.0)]

    @pytest.mark.parametrize("a,b", PAIRS)
    def test_ccr_is_half_fisher(self, a, b):
        assert ccr_degree(a, b).coefficient == pytest.approx(
            0.5 * fisher_degree(a, b).coefficient, rel=1e-12
        )

    @pytest.mark.parametrize("a,b", PAIRS)
    def test_cfs_from_fisher(self, a, b):
        factor = (math.pi / math.e) ** 2 / (2 * math.pi * math.e)
        assert cfs_degree(a, b).coefficient == pytest.approx(
            fisher_degree(a, b).coefficient * factor, rel=1e-12
        )

    @pytest.mark.parametrize("n", [0, 1, 2, 5, 9])
    @pytest.mark.parametrize("beta", [1.5, 2.0, 3.0, 7.5])
    def test_ccr_param_product_structure(self, n, beta):
        lim_v_alpha2 = 4.0 * ((n + 1) * (n + beta + 1) + n * (n + beta))
        assert ccr_param(n, beta).coefficient == pytest.approx(
            f_param(n, beta).coefficient * lim_v_alpha2, rel=1e-12
        )

    @pytest.mark.parametrize("a,b", [(1.0, 1.0), (2.0, 2.0), (0.5, 4.0), (3.0, 1.0)])
    def test_clmc_is_w2_times_pi_over_e(self, a, b):
        assert clmc_degree(a, b).coefficient == pytest.approx(
            w2_degree(a, b).coefficient * PI_E, rel=1e-12
        )

    @pytest.mark.parametrize("n,beta", [(0, 2.0), (1, 2.0), (3, 0.5)])
    def test_variance_alpha_limit(self, n, beta):
        # O(1/alpha) approach with constants of order 10-30
        alpha = 1e4
        lim = 4.0 * ((n + 1) * (n + beta + 1) + n * (n + beta))
        assert variance(PolyParams(n, alpha, beta)) * alpha**2 == pytest.approx(lim, rel=5e-3)


def test_entropy_alpha_constant_value():
    # n=0, beta=2: ln 2 + ln Gamma(3) + 3 - 2 psi(3)
    expected = math.log(2.0) + math.log(2.0) + 3.0 - 2.0 * (1.5 - 0.5772156649015329)
    assert entropy_alpha_constant(0, 2.0) == pytest.approx(expected, rel=1e-12)


def test_prediction_metadata():
    pred = f_param(1, 2.0)
    assert pred.regime == ALPHA
    assert pred.measure == "fisher"
    assert "beta > 1" in pred.applicability
    assert ccr_degree(0.0, 0.0).regime == DEGREE
