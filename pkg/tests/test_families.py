from fractions import Fraction as F

import pytest

from qoscpoly import (Basis, FamilyVector, Poly,
                      connect_hahn_gaussian, expand_in_basis,
                      family_basis_poly, hahn_factorial, position_coefficients,
                      q_double_factorial_even, q_factorial, q_int, qfactorial_u,
                      qfactorial_pochhammer_value, qgaussian,
                      qgaussian_via_qexp_operator, vector_to_poly)
from qoscpoly.poly import VAR_U

METHODS = ("product", "recursion", "explicit_sum")


class TestQGaussian:
    def test_low_orders(self, ctx_q12):
        q = ctx_q12.q
        assert qgaussian(ctx_q12, 0) == Poly.one()
        assert qgaussian(ctx_q12, 1) == Poly([-1, 1])
        assert qgaussian(ctx_q12, 2) == Poly([q, -1 - q, 1])

    def test_methods_agree(self, ctx_q12):
        for n in range(12):
            ref = qgaussian(ctx_q12, n, "product")
            for method in METHODS[1:]:
                assert qgaussian(ctx_q12, n, method) == ref

    def test_roots_are_q_powers(self, ctx_q916):
        p = qgaussian(ctx_q916, 6)
        for k in range(6):
            assert p(ctx_q916.q ** k) == 0
        assert p(2) != 0

    def test_three_term_recursion(self, ctx_q14):
        # x phi_n = phi_{n+1} + q^n phi_n
        x = Poly([0, 1])
        for n in range(10):
            phi = qgaussian(ctx_q14, n)
            assert x * phi == qgaussian(ctx_q14, n + 1) + ctx_q14.q_pow(n) * phi

    def test_bad_method(self, ctx_q12):
        with pytest.raises(ValueError):
            qgaussian(ctx_q12, 2, "interpolation")
        with pytest.raises(ValueError):
            qgaussian(ctx_q12, -1)

    def test_operator_series_form(self, ctx_q916):
        for n in range(10):
            assert qgaussian_via_qexp_operator(ctx_q916, n) == qgaussian(ctx_q916, n)


class TestQFactorialFamily:
    def test_low_orders(self, ctx_q12):
        q = ctx_q12.q
        assert qfactorial_u(ctx_q12, 0) == Poly.one(VAR_U)
        assert qfactorial_u(ctx_q12, 1) == Poly([1, -1], VAR_U) / (1 - q)

    def test_lives_in_u(self, ctx_q12):
        assert qfactorial_u(ctx_q12, 3).var == VAR_U

    def test_vanishes_at_small_integers(self, ctx_q916):
        # phihat_n(x) = [x]_q [x-1]_q ... [x-n+1]_q kills x = 0..n-1
        q = ctx_q916.q
        p = qfactorial_u(ctx_q916, 5)
        for x in range(5):
            assert p(q ** x) == 0

    def test_integer_values_match_q_factorials(self, ctx_q916):
        q = ctx_q916.q
        for n in range(7):
            p = qfactorial_u(ctx_q916, n)
            for x in range(n, n + 5):
                expect = q_factorial(ctx_q916, x) / q_factorial(ctx_q916, x - n)
                assert p(q ** x) == expect

    def test_pochhammer_identity_oracle(self, ctx_q12):
        q = ctx_q12.q
        for n in range(7):
            p = qfactorial_u(ctx_q12, n)
            for x in range(0, 9):
                assert p(q ** x) == qfactorial_pochhammer_value(ctx_q12, n, x)


class TestHahnFactorial:
    def test_low_orders(self, ctx_q14):
        w = ctx_q14.omega
        assert hahn_factorial(ctx_q14, 0) == Poly.one()
        assert hahn_factorial(ctx_q14, 1) == Poly([0, 1])
        assert hahn_factorial(ctx_q14, 2) == Poly([0, -w, 1])

    def test_methods_agree(self, ctx_q14):
        for n in range(12):
            ref = hahn_factorial(ctx_q14, n, "product")
            for method in METHODS[1:]:
                assert hahn_factorial(ctx_q14, n, method) == ref

    def test_roots_are_q_integers(self, ctx_q916):
        p = hahn_factorial(ctx_q916, 6)
        for k in range(6):
            assert p(q_int(ctx_q916, k) * ctx_q916.omega) == 0

    def test_omega_zero_gives_monomials(self, ctx_q916):
        ctx0 = ctx_q916.with_omega(0)
        for n in range(8):
            assert hahn_factorial(ctx0, n) == Poly.monomial(n)

    def test_shifted_recursion(self, ctx_q14):
        # (x - omega0) phidot_n = phidot_{n+1} - omega0 q^n phidot_n
        w0 = ctx_q14.omega0
        shift = Poly([-w0, 1])
        for n in range(10):
            phi = hahn_factorial(ctx_q14, n)
            assert shift * phi == (hahn_factorial(ctx_q14, n + 1)
                                   - w0 * ctx_q14.q_pow(n) * phi)

    def test_connection_to_qgaussian(self, ctx_q14):
        for n in range(10):
            assert connect_hahn_gaussian(ctx_q14, n) == hahn_factorial(ctx_q14, n)

    def test_connection_degenerate(self, ctx_q916):
        with pytest.raises(ValueError):
            connect_hahn_gaussian(ctx_q916.with_omega(0), 3)


class TestBasisConversion:
    @pytest.mark.parametrize("basis", [Basis.MONOMIAL, Basis.SHIFTED_MONOMIAL,
                                       Basis.QGAUSSIAN, Basis.HAHN_FACTORIAL])
    def test_roundtrip(self, ctx_q14, basis):
        p = Poly([F(1, 3), -2, 0, F(5, 7), 1])
        v = expand_in_basis(ctx_q14, p, basis)
        assert vector_to_poly(ctx_q14, v) == p

    def test_monomial_inversion_pointwise(self, ctx_q916):
        # x^n = sum_k [n,k]_q phi_k(x) checked as polynomials
        for n in range(9):
            v = expand_in_basis(ctx_q916, Poly.monomial(n), Basis.QGAUSSIAN)
            assert vector_to_poly(ctx_q916, v) == Poly.monomial(n)

    def test_expand_single_basis_element(self, ctx_q14):
        v = expand_in_basis(ctx_q14, hahn_factorial(ctx_q14, 4),
                            Basis.HAHN_FACTORIAL)
        assert v.trimmed().coeffs == (0, 0, 0, 0, 1)

    def test_u_polynomial_rejected(self, ctx_q14):
        with pytest.raises(ValueError):
            expand_in_basis(ctx_q14, qfactorial_u(ctx_q14, 2), Basis.MONOMIAL)

    def test_family_vector_padding(self):
        v = FamilyVector(Basis.MONOMIAL, (1, 2))
        assert v.coeff(5) == 0
        assert v.coeff(-1) == 0

    def test_basis_polys_match_families(self, ctx_q14):
        assert family_basis_poly(ctx_q14, Basis.QGAUSSIAN, 3) == qgaussian(ctx_q14, 3)
        assert (family_basis_poly(ctx_q14, Basis.HAHN_FACTORIAL, 3)
                == hahn_factorial(ctx_q14, 3))
        assert family_basis_poly(ctx_q14, Basis.SHIFTED_MONOMIAL, 2) == (
            Poly([-ctx_q14.omega0, 1]) ** 2)


class TestPositionCoefficients:
    def test_low_orders(self, ctx_q916):
        q = ctx_q916.q
        cs = position_coefficients(ctx_q916, 3)
        assert cs[0] == Poly.one()
        assert cs[1] == Poly([0, 1])
        two = q_int(ctx_q916, 2)
        three = q_int(ctx_q916, 3)
        assert cs[2] == Poly([-1, 0, 1]) / two
        assert cs[3] == Poly([0, -1 / q - 1 / two, 0, 1 / two]) / three

    def test_recursion_holds(self, ctx_q14):
        x = Poly([0, 1])
        cs = position_coefficients(ctx_q14, 8)
        for n in range(1, 8):
            lhs = x * cs[n]
            rhs = q_int(ctx_q14, n + 1) * cs[n + 1] + ctx_q14.q_pow(1 - n) * cs[n - 1]
            assert lhs == rhs

    def test_even_values_at_origin(self, ctx_q916):
        # c_{2n}(0) = (-1)^n q^(n(1-n)) / [2n]_q!!
        cs = position_coefficients(ctx_q916, 12)
        for n in range(7):
            sign = -1 if n % 2 else 1
            expect = (sign * ctx_q916.q_pow(n * (1 - n))
                      / q_double_factorial_even(ctx_q916, n))
            assert cs[2 * n](0) == expect

    def test_odd_vanish_at_origin(self, ctx_q916):
        cs = position_coefficients(ctx_q916, 11)
        for n in range(1, 12, 2):
            assert cs[n](0) == 0
