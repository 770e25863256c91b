"""integral_eval 测试：log Γ 矩、负阶多伽马函数、g 积分法则与 log G 矩"""

import math

import numpy as np
import pytest
from scipy import integrate

from hankelzeta.errors import DomainError, OrderTooLargeError
from hankelzeta.integral_eval import (
    MomentQuery, g_integral_rule, integration_rule_73, log_g_moment, log_g_moment_quadrature,
    log_gamma_integral_m0, log_gamma_moment, log_gamma_moment_quadrature, negative_polygamma,
    negative_polygamma_quadrature, psi_moment, psi_moment_quadrature,
)
from hankelzeta.special_core import LOG_SQRT_2PI, log_gamma

A_VALUES = (1.0, 2.5, 1.0 + 0.5j)


def relative_deviation(x, y):
    return abs(x - y) / (1.0 + abs(y))


class TestLogGammaMoment:

    def test_raabe_unit_interval(self):
        """∫₀¹ log Γ(1+s) ds = ln√(2π) − 1"""
        value = log_gamma_moment(MomentQuery(1.0, 1.0, 0))
        assert value.real == pytest.approx(LOG_SQRT_2PI - 1.0, abs=1e-12)

    def test_raabe_general(self):
        """∫₀¹ log Γ(a+s) ds = ln√(2π) + a ln a − a"""
        a = 2.5
        expected = LOG_SQRT_2PI + a * math.log(a) - a
        assert log_gamma_moment(MomentQuery(1.0, a, 0)).real == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("m", range(4))
    @pytest.mark.parametrize("a", A_VALUES)
    @pytest.mark.parametrize("t", [0.5, -0.3, 0.4 + 0.2j])
    def test_against_quadrature(self, m, a, t):
        q = MomentQuery(t, a, m)
        assert relative_deviation(log_gamma_moment(q), log_gamma_moment_quadrature(q).value) < 1e-9

    def test_negative_endpoint_allowed(self):
        """只需 Re(a+t) > 0，t 可以越过 −Re(a)/2"""
        q = MomentQuery(-0.8, 1.0, 1)
        assert relative_deviation(log_gamma_moment(q), log_gamma_moment_quadrature(q).value) < 1e-9

    def test_zero_length(self):
        assert log_gamma_moment(MomentQuery(0.0, 1.5, 2)) == 0

    @pytest.mark.parametrize("a", A_VALUES)
    def test_three_forms_agree(self, a):
        q = MomentQuery(0.7, a, 0)
        reference = log_gamma_integral_m0(q, "g_form")
        np.testing.assert_allclose(log_gamma_integral_m0(q, "zeta_form"), reference, rtol=1e-10)
        np.testing.assert_allclose(log_gamma_integral_m0(q, "barnes_form"), reference, rtol=1e-10)
        np.testing.assert_allclose(log_gamma_moment(q), reference, rtol=1e-12)

    def test_form_validation(self):
        with pytest.raises(DomainError):
            log_gamma_integral_m0(MomentQuery(0.5, 1.0, 0), "h_form")
        with pytest.raises(DomainError):
            log_gamma_integral_m0(MomentQuery(0.5, 1.0, 1))

    def test_query_validation(self):
        with pytest.raises(DomainError):
            MomentQuery(-1.5, 1.0, 0)
        with pytest.raises(OrderTooLargeError):
            MomentQuery(0.5, 1.0, 21)


class TestPsiMoment:

    @pytest.mark.parametrize("p", [1, 2, 3])
    @pytest.mark.parametrize("a", A_VALUES)
    def test_against_quadrature(self, p, a):
        t = 0.4
        assert relative_deviation(psi_moment(t, a, p), psi_moment_quadrature(t, a, p).value) < 1e-9

    def test_first_moment_is_log_gamma_difference(self):
        """∫₀ᵗ ψ(a−s) ds = log Γ(a) − log Γ(a−t)"""
        a, t = 1.5, 0.6
        expected = log_gamma(a).value - log_gamma(a - t).value
        np.testing.assert_allclose(psi_moment(t, a, 1), expected, rtol=1e-12)

    def test_order_zero_rejected(self):
        with pytest.raises(DomainError):
            psi_moment(0.3, 1.0, 0)


class TestNegativePolygamma:

    @pytest.mark.parametrize("t", [0.5, 1.0, 2.5])
    def test_order_one_is_log_gamma(self, t):
        assert negative_polygamma(1, t) == log_gamma(t).value

    def test_unit_integral(self):
        """Ψ^{(−2)}(1) = ∫₀¹ log Γ(s) ds = ln√(2π)"""
        assert negative_polygamma(2, 1.0).real == pytest.approx(LOG_SQRT_2PI, abs=1e-11)

    @pytest.mark.parametrize("k", [2, 3, 4])
    @pytest.mark.parametrize("t", [0.5, 1.0, 2.5])
    def test_against_quadrature(self, k, t):
        expected = negative_polygamma_quadrature(k, t).value
        assert relative_deviation(negative_polygamma(k, t), expected) < 1e-8

    def test_domain(self):
        with pytest.raises(DomainError):
            negative_polygamma(2, -1.0)
        with pytest.raises(DomainError):
            negative_polygamma(2, 1 + 1j)
        with pytest.raises(DomainError):
            negative_polygamma(0, 1.0)
        with pytest.raises(OrderTooLargeError):
            negative_polygamma(11, 1.0)


class TestGIntegralRule:

    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("a", A_VALUES)
    def test_verified_against_quadrature(self, m, a):
        # verify=True 时与数值积分不一致会抛出 ConsistencyError
        g_integral_rule(m, a, 0.6)

    def test_zero_length(self):
        assert g_integral_rule(2, 1.5, 0.0) == 0

    def test_order_zero_rejected(self):
        with pytest.raises(DomainError):
            g_integral_rule(0, 1.0, 0.5)

    @pytest.mark.parametrize("m", [0, 1, 3])
    @pytest.mark.parametrize("z", [1.2, -0.7])
    def test_exponential_moment_rule(self, m, z):
        t = 0.9
        expected, _ = integrate.quad(lambda y: y ** m * math.exp(z * y), 0, t, epsabs=1e-14)
        np.testing.assert_allclose(integration_rule_73(m, t, z), expected, rtol=1e-11)


class TestLogGMoment:

    @pytest.mark.parametrize("m", range(3))
    @pytest.mark.parametrize("a", [1.5, 2.5, 1.0 + 0.5j])
    def test_against_quadrature(self, m, a):
        q = MomentQuery(0.5, a, m)
        assert relative_deviation(log_g_moment(q), log_g_moment_quadrature(q).value) < 1e-8

    def test_zero_length(self):
        assert log_g_moment(MomentQuery(0.0, 1.5, 1)) == 0
