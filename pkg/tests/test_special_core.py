"""special_core 的单元测试：组合数、Gamma 族、Hurwitz zeta 与 Barnes G"""

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import special

from hankelzeta.domain import Method
from hankelzeta.errors import DomainError, OrderTooLargeError, PoleError
from hankelzeta.special_core import (
    EulerMaclaurinParams, LOG_SQRT_2PI, barnes_log_g, barnes_log_g_poly, bernoulli_number,
    bernoulli_poly, binomial, constants, digamma, digamma_difference, euler_gamma, g, gamma,
    geometric_poly, harmonic_number, hurwitz_zeta, hurwitz_zeta_adiff, hurwitz_zeta_sderiv,
    log_gamma, polygamma, psi_int, stirling2, zeta_neg_int,
)

EULER_GAMMA = 0.5772156649015329
LOG_GLAISHER = 0.2487544770337843


class TestCombinatorics:

    def test_bernoulli_numbers(self):
        assert bernoulli_number(0) == 1
        assert bernoulli_number(1) == Fraction(-1, 2)
        assert bernoulli_number(2) == Fraction(1, 6)
        assert bernoulli_number(3) == 0
        assert bernoulli_number(4) == Fraction(-1, 30)
        assert bernoulli_number(12) == Fraction(-691, 2730)

    def test_odd_bernoulli_vanish(self):
        assert all(bernoulli_number(n) == 0 for n in range(3, 61, 2))

    def test_bernoulli_order_limit(self):
        with pytest.raises(OrderTooLargeError):
            bernoulli_number(61)

    @pytest.mark.parametrize("x", [0.0, 0.3, 1.0, 2.5, 1.0 + 0.5j])
    def test_bernoulli_poly_low_orders(self, x):
        np.testing.assert_allclose(bernoulli_poly(2, x), x * x - x + 1.0 / 6.0, atol=1e-14)
        np.testing.assert_allclose(bernoulli_poly(3, x), x ** 3 - 1.5 * x * x + 0.5 * x, atol=1e-13)

    def test_bernoulli_poly_high_order_exact(self):
        """高阶 B_n(x) 按有理数求值，没有系数抵消"""
        assert bernoulli_poly(41, 1.0) == 0
        half = (Fraction(1, 2 ** 39) - 1) * bernoulli_number(40)
        assert bernoulli_poly(40, 0.5).real == pytest.approx(float(half), rel=1e-15)
        assert zeta_neg_int(40, 1.0) == 0

    @pytest.mark.parametrize("n", [2, 5, 10])
    def test_bernoulli_poly_difference(self, n):
        """B_n(x+1) − B_n(x) = n x^{n−1}"""
        x = 0.7
        np.testing.assert_allclose(bernoulli_poly(n, x + 1) - bernoulli_poly(n, x), n * x ** (n - 1),
                                   rtol=1e-12)

    def test_stirling_values(self):
        assert stirling2(0, 0) == 1
        assert stirling2(5, 0) == 0
        assert stirling2(5, 2) == 15
        assert stirling2(10, 3) == 9330
        assert stirling2(7, 7) == 1
        assert stirling2(3, 5) == 0

    def test_stirling_row_sums_to_bell(self):
        assert sum(stirling2(10, k) for k in range(11)) == 115975

    def test_stirling_order_limit(self):
        with pytest.raises(OrderTooLargeError):
            stirling2(41, 1)

    def test_geometric_poly(self):
        x = 0.4
        assert geometric_poly(0, x) == 1
        np.testing.assert_allclose(geometric_poly(3, x), x + 6 * x ** 2 + 6 * x ** 3, rtol=1e-15)

    @pytest.mark.parametrize("m", [0, 1, 2, 5])
    def test_geometric_poly_generates_power_sums(self, m):
        """Σ nᵐ λⁿ = ω_m(λ/(1−λ))/(1−λ)"""
        lam = 0.3
        n = np.arange(400)
        brute = np.sum(n.astype(float) ** m * lam ** n)
        np.testing.assert_allclose(geometric_poly(m, lam / (1 - lam)) / (1 - lam), brute, rtol=1e-13)

    def test_binomial(self):
        assert binomial(30, 15) == 155117520
        assert binomial(4, 7) == 0
        with pytest.raises(OrderTooLargeError):
            binomial(31, 2)

    def test_negative_order_rejected(self):
        with pytest.raises(DomainError):
            stirling2(-1, 0)


class TestGammaFunctions:

    @pytest.mark.parametrize("s", [0.1, 0.5, 1.0, 3.7, 12.0, 0.5 + 2j, 2 - 3j])
    def test_digamma_against_scipy(self, s):
        np.testing.assert_allclose(digamma(s).value, special.psi(s), rtol=1e-12, atol=1e-13)

    def test_digamma_special_values(self):
        assert digamma(1).value.real == pytest.approx(-EULER_GAMMA, abs=1e-15)
        assert digamma(0.5).value.real == pytest.approx(-EULER_GAMMA - 2 * math.log(2), abs=1e-14)
        assert digamma(0.25).value.real == pytest.approx(
            -EULER_GAMMA - math.pi / 2 - 3 * math.log(2), abs=1e-13)

    @pytest.mark.parametrize("s", [-0.5, -3.25, -25.5])
    def test_digamma_negative_real_axis(self, s):
        np.testing.assert_allclose(digamma(s).value.real, special.psi(s), rtol=1e-10)

    @pytest.mark.parametrize("s", [0, -1, -7])
    def test_digamma_poles(self, s):
        with pytest.raises(PoleError):
            digamma(s)

    @pytest.mark.parametrize("s", [0.1, 0.5, 1.0, 2.5, 30.0, 1 + 0.5j, 0.3 - 4j])
    def test_log_gamma_against_scipy(self, s):
        np.testing.assert_allclose(log_gamma(s).value, special.loggamma(s), rtol=1e-12, atol=1e-13)

    def test_log_gamma_anchors(self):
        assert abs(log_gamma(1).value) < 1e-14
        assert abs(log_gamma(2).value) < 1e-14
        assert log_gamma(0.5).value.real == pytest.approx(0.5 * math.log(math.pi), abs=1e-14)

    def test_log_gamma_pole(self):
        with pytest.raises(PoleError):
            log_gamma(-2)

    def test_gamma_integers(self):
        assert gamma(5).real == pytest.approx(24.0, rel=1e-13)
        assert gamma(0.5).real == pytest.approx(math.sqrt(math.pi), rel=1e-13)

    @pytest.mark.parametrize("s", [0.3, 0.5, 0.25 + 0.5j])
    def test_reflection(self, s):
        value = gamma(s) * gamma(1 - s) * np.sin(np.pi * s) / np.pi
        np.testing.assert_allclose(value, 1.0, rtol=1e-12)

    def test_euler_gamma(self):
        assert euler_gamma() == pytest.approx(EULER_GAMMA, rel=1e-15)

    @pytest.mark.parametrize("n", [0, 1, 2, 10, 50])
    def test_psi_int(self, n):
        assert psi_int(n) == pytest.approx(special.psi(n + 1), rel=1e-14, abs=1e-15)
        assert harmonic_number(n) == pytest.approx(psi_int(n) + EULER_GAMMA, abs=1e-13)

    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("s", [0.5, 1.0, 4.2])
    def test_polygamma_against_scipy(self, m, s):
        np.testing.assert_allclose(polygamma(m, s).value.real, special.polygamma(m, s), rtol=1e-12)

    def test_polygamma_zero_is_digamma(self):
        assert polygamma(0, 2.5).value == digamma(2.5).value

    @pytest.mark.parametrize("a,b", [(1.0, 2.0), (0.3, 7.5), (1 + 1j, 2.5)])
    def test_digamma_difference(self, a, b):
        expected = special.psi(a) - special.psi(b)
        np.testing.assert_allclose(digamma_difference(a, b).value, expected, rtol=1e-12, atol=1e-13)

    def test_digamma_difference_domain(self):
        with pytest.raises(DomainError):
            digamma_difference(-0.5, 1.0)


class TestHurwitzZeta:

    @pytest.mark.parametrize("s", [1.5, 2.0, 3.5, 7.0])
    @pytest.mark.parametrize("a", [0.5, 1.0, 2.5, 10.0])
    def test_against_scipy(self, s, a):
        np.testing.assert_allclose(hurwitz_zeta(s, a).value.real, special.zeta(s, a), rtol=1e-12)

    def test_riemann_values(self):
        assert hurwitz_zeta(2, 1).value.real == pytest.approx(math.pi ** 2 / 6, rel=1e-13)
        assert hurwitz_zeta(3, 1).value.real == pytest.approx(1.2020569031595942, rel=1e-13)
        assert hurwitz_zeta(0.5, 1).value.real == pytest.approx(-1.4603545088095868, rel=1e-12)
        assert hurwitz_zeta(-0.5, 1).value.real == pytest.approx(-0.20788622497735457, rel=1e-12)

    @pytest.mark.parametrize("n", range(41))
    @pytest.mark.parametrize("a", [0.5, 1.0, 2.5, 1 + 0.5j])
    def test_negative_integers(self, n, a):
        value = hurwitz_zeta(-n, a).value
        np.testing.assert_allclose(value, zeta_neg_int(n, a), rtol=1e-10, atol=1e-11)

    def test_zeta_neg_int_values(self):
        assert zeta_neg_int(1, 1).real == pytest.approx(-1.0 / 12.0, abs=1e-15)
        assert zeta_neg_int(3, 1).real == pytest.approx(1.0 / 120.0, abs=1e-15)
        assert zeta_neg_int(0, 2.5).real == pytest.approx(0.5 - 2.5, abs=1e-15)

    def test_very_negative_integers(self):
        assert hurwitz_zeta(-20, 1).value == 0
        assert hurwitz_zeta(-30, 1).value == 0
        assert hurwitz_zeta(-40, 1).value == 0
        # ζ(−n,½) = (2^{−n} − 1) ζ(−n)，ζ(−19) = 174611/6600，ζ(−25) = −8553103/156
        assert hurwitz_zeta(-19, 0.5).value.real == pytest.approx(
            float((Fraction(1, 2 ** 19) - 1) * Fraction(174611, 6600)), rel=1e-14)
        assert hurwitz_zeta(-25, 0.5).value.real == pytest.approx(
            float((Fraction(1, 2 ** 25) - 1) * Fraction(-8553103, 156)), rel=1e-14)
        expected = float(-bernoulli_number(58) / 58)
        assert hurwitz_zeta(-57, 1).value.real == pytest.approx(expected, rel=1e-14)
        assert hurwitz_zeta(-56, 1).value == 0

    @pytest.mark.parametrize("n", [0, 3, 7, 12, 19, 25, 33, 40])
    @pytest.mark.parametrize("a", [0.5, 1.0, 2.5, 1 + 0.5j])
    def test_negative_integer_neighbourhood(self, n, a):
        """ζ(−n+δ,a) ≈ ζ(−n,a) + δ ζ′(−n,a)，非整数点不走 Bernoulli 多项式"""
        delta = 1e-7
        exact = zeta_neg_int(n, a)
        slope = hurwitz_zeta_sderiv(-n, a).value
        expected = exact + delta * slope
        value = hurwitz_zeta(-n + delta, a).value
        assert abs(value - expected) <= 1e-6 * (abs(exact) + abs(delta * slope)) + 1e-12

    @pytest.mark.parametrize("s", [-6.5, -20.5, -41.25, -70.5])
    def test_half_argument_far_left(self, s):
        np.testing.assert_allclose(hurwitz_zeta(s, 0.5).value, (2 ** s - 1) * hurwitz_zeta(s, 1).value,
                                   rtol=1e-11)

    @pytest.mark.parametrize("s", [-15.5, -30.25 + 1j])
    @pytest.mark.parametrize("a", [3.2, 2 + 1j, 5.5 + 0.5j])
    def test_shift_identity_far_left(self, s, a):
        difference = hurwitz_zeta(s, a).value - hurwitz_zeta(s, a + 1).value
        np.testing.assert_allclose(difference, complex(a) ** -complex(s), rtol=1e-9)

    @pytest.mark.parametrize("n", [10, 20])
    def test_sderiv_far_left_even_integers(self, n):
        """ζ′(−2k) = (−1)^k (2k)! ζ(2k+1) / (2 (2π)^{2k})"""
        k = n // 2
        expected = (-1) ** k * math.factorial(n) * special.zeta(n + 1, 1) / (2 * (2 * math.pi) ** n)
        np.testing.assert_allclose(hurwitz_zeta_sderiv(-n, 1).value.real, expected, rtol=1e-11)

    @pytest.mark.parametrize("s", [-12.0, -20.5])
    @pytest.mark.parametrize("a", [1.5, 1 + 0.5j])
    def test_sderiv_far_left_finite_difference(self, s, a):
        h = 1e-5
        numeric = (hurwitz_zeta(s + h, a).value - hurwitz_zeta(s - h, a).value) / (2 * h)
        np.testing.assert_allclose(hurwitz_zeta_sderiv(s, a).value, numeric, rtol=1e-7)

    @pytest.mark.parametrize("s", [-2.5, 0.5 + 3j, 4.0 - 1j])
    @pytest.mark.parametrize("a", [0.7, 1 + 0.5j])
    def test_shift_identity(self, s, a):
        """ζ(s,a) − ζ(s,a+1) = a^{−s}"""
        difference = hurwitz_zeta(s, a).value - hurwitz_zeta(s, a + 1).value
        np.testing.assert_allclose(difference, complex(a) ** -complex(s), rtol=1e-11)

    def test_half_argument(self):
        """ζ(s,½) = (2ˢ − 1)ζ(s)"""
        s = -2.5
        np.testing.assert_allclose(hurwitz_zeta(s, 0.5).value, (2 ** s - 1) * hurwitz_zeta(s, 1).value,
                                   rtol=1e-9)

    def test_method_tags(self):
        assert hurwitz_zeta(30, 1.0).method is Method.SERIES
        assert hurwitz_zeta(-1.5, 1.0).method is Method.EULER_MACLAURIN
        assert hurwitz_zeta(-20.5, 1.0).method is Method.SERIES
        assert hurwitz_zeta(-20, 1.0).method is Method.CLOSED_FORM

    def test_pole_and_domain(self):
        with pytest.raises(PoleError):
            hurwitz_zeta(1, 2.0)
        with pytest.raises(DomainError):
            hurwitz_zeta(2, 0.0)
        with pytest.raises(DomainError):
            hurwitz_zeta(2, -1.5)

    def test_explicit_shift_agrees_with_adaptive(self):
        fixed = hurwitz_zeta(-3.5, 1.5, EulerMaclaurinParams(shift=40)).value
        np.testing.assert_allclose(fixed, hurwitz_zeta(-3.5, 1.5).value, rtol=1e-10)

    def test_default_shift_is_adaptive(self):
        params = EulerMaclaurinParams()
        assert params.shift is None
        assert params.order == 10
        fixed = hurwitz_zeta(-2.5 + 1j, 0.7, EulerMaclaurinParams(shift=20, order=10)).value
        np.testing.assert_allclose(fixed, hurwitz_zeta(-2.5 + 1j, 0.7).value, rtol=1e-12)

    def test_em_params_validation(self):
        with pytest.raises(OrderTooLargeError):
            EulerMaclaurinParams(order=40)
        with pytest.raises(DomainError):
            EulerMaclaurinParams(shift=-1)

    @pytest.mark.parametrize("a", [0.5, 1.0, 2.5, 1 + 0.5j])
    def test_sderiv_at_zero(self, a):
        """ζ′(0,a) = log Γ(a) − ln√(2π)"""
        expected = special.loggamma(a) - LOG_SQRT_2PI
        np.testing.assert_allclose(hurwitz_zeta_sderiv(0, a).value, expected, rtol=1e-12, atol=1e-13)

    def test_sderiv_known_values(self):
        assert hurwitz_zeta_sderiv(-1, 1).value.real == pytest.approx(-0.1654211437004509, abs=1e-13)
        assert hurwitz_zeta_sderiv(2, 1).value.real == pytest.approx(-0.9375482543158437, rel=1e-11)

    @pytest.mark.parametrize("s", [-1.5, 0.5, 2.5])
    def test_sderiv_finite_difference(self, s):
        h = 1e-5
        numeric = (hurwitz_zeta(s + h, 1.5).value - hurwitz_zeta(s - h, 1.5).value) / (2 * h)
        np.testing.assert_allclose(hurwitz_zeta_sderiv(s, 1.5).value, numeric, rtol=1e-8)

    @pytest.mark.parametrize("a", [0.5, 2.0])
    def test_adiff(self, a):
        np.testing.assert_allclose(hurwitz_zeta_adiff(1, 2, a).value.real, -2 * special.zeta(3, a),
                                   rtol=1e-12)
        np.testing.assert_allclose(hurwitz_zeta_adiff(2, 2, a).value.real, 6 * special.zeta(4, a),
                                   rtol=1e-12)

    def test_adiff_polynomial_case(self):
        """s = −1 时二阶以上 a-导数为零（(s)ₙ 含因子 0）"""
        assert hurwitz_zeta_adiff(2, -1, 1.5).value == 0


class TestConstants:

    def test_record(self):
        c = constants()
        assert c.gamma == pytest.approx(EULER_GAMMA, rel=1e-15)
        assert c.log_sqrt_2pi == pytest.approx(0.9189385332046727, rel=1e-15)
        assert c.log_glaisher == pytest.approx(LOG_GLAISHER, rel=1e-12)


class TestGFamily:

    @pytest.mark.parametrize("a", [0.5, 1.0, 2.5, 1 + 0.5j])
    def test_g_zero(self, a):
        """g(0,a) = log Γ(a) − ln√(2π) − γ(½ − a)"""
        expected = special.loggamma(a) - LOG_SQRT_2PI - EULER_GAMMA * (0.5 - a)
        np.testing.assert_allclose(g(0, a).value, expected, rtol=1e-12, atol=1e-13)

    def test_g_record(self):
        record = g(2, 1.5)
        assert record.n == 2
        assert record.a.value == 1.5
        assert record.abs_err >= 0.0

    @pytest.mark.parametrize("a", [1, 2, 3])
    def test_barnes_trivial_zeros(self, a):
        assert abs(barnes_log_g(a).value) < 1e-12

    def test_barnes_integer_values(self):
        assert barnes_log_g(4).value.real == pytest.approx(math.log(2), abs=1e-12)
        assert barnes_log_g(5).value.real == pytest.approx(math.log(12), abs=1e-11)

    def test_barnes_half(self):
        expected = math.log(2) / 24 + 0.125 - 0.25 * math.log(math.pi) - 1.5 * LOG_GLAISHER
        assert barnes_log_g(0.5).value.real == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("a", [0.5, 1.5, 2.5, 1 + 0.5j])
    def test_barnes_recurrence(self, a):
        """log G(a+1) = log Γ(a) + log G(a)"""
        lhs = barnes_log_g(a + 1).value
        rhs = log_gamma(a).value + barnes_log_g(a).value
        np.testing.assert_allclose(lhs, rhs, rtol=1e-11, atol=1e-12)

    @pytest.mark.parametrize("a", [0.5, 1.5, 2.5, 1 + 0.5j])
    def test_polynomial_form(self, a):
        np.testing.assert_allclose(barnes_log_g_poly(a).value, barnes_log_g(a).value, rtol=1e-10, atol=1e-11)
