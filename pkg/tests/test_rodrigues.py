"""Rodrigues operator, complementary rows, eigenvalues and residuals."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

import oracles
from copoly import (
    AdmissibilityViolation,
    CATALOG,
    InvalidParameter,
    Poly,
    bessel_family,
    complementary,
    complementary_table,
    custom_family,
    derivative_proportionality,
    functional_apply,
    hermite_family,
    jacobi_family,
    laguerre_family,
    lambda_n,
    leading_coeff_probe,
    mu_eigenvalue,
    ode_residual,
    pair_from_family,
    psi_k,
    rodrigues_formula_residual,
    rodrigues_r1,
    rodrigues_rk,
    sturm_liouville_residual,
)

ALPHA = Fraction(1, 2)          # laguerre fixture parameter
JA, JB = Fraction(1, 3), 2      # jacobi fixture parameters


class TestFamilyBuilders:
    def test_catalog_names(self):
        assert CATALOG == ("hermite", "laguerre", "jacobi", "bessel")

    def test_hermite(self):
        spec = hermite_family()
        assert spec.phi == Poly.one() and spec.psi == Poly([0, -2])

    def test_laguerre(self):
        spec = laguerre_family(ALPHA)
        assert spec.phi == Poly.x()
        assert spec.psi == Poly([Fraction(3, 2), -1])
        assert spec.params == {"alpha": ALPHA}

    def test_jacobi(self):
        spec = jacobi_family(JA, JB)
        assert spec.phi == Poly([1, 0, -1])
        assert spec.psi == Poly([Fraction(5, 3), Fraction(-13, 3)])

    def test_bessel(self):
        spec = bessel_family(1)
        assert spec.phi == Poly.monomial(2)
        assert spec.psi == Poly([2, 3])

    def test_custom(self):
        spec = custom_family(Poly([1, 1]), Poly([0, 1]), u0=Fraction(1, 2))
        assert spec.name == "custom"
        assert spec.u0 == Fraction(1, 2)

    def test_degenerate_jacobi_rejected(self):
        # alpha + beta + 2 = 0 collapses psi to a constant
        with pytest.raises(InvalidParameter):
            pair_from_family(jacobi_family(-3, 1), max_order=8)

    def test_cubic_phi_rejected(self):
        with pytest.raises(InvalidParameter):
            pair_from_family(custom_family(Poly.monomial(3), Poly([0, 1])), max_order=8)

    def test_inadmissible_bessel_rejected(self):
        with pytest.raises(AdmissibilityViolation) as exc:
            pair_from_family(bessel_family(-5), max_order=20)
        assert exc.value.k == 3

    def test_pair_carries_moments(self, laguerre_pair):
        assert laguerre_pair.u.moment(1) == Fraction(3, 2)

    def test_functional_power_matches_direct_pairing(self, jacobi_pair):
        u2 = jacobi_pair.functional_power(2)
        phi_sq = jacobi_pair.phi**2
        for m in range(6):
            expected = functional_apply(jacobi_pair.u, phi_sq * Poly.monomial(m))
            assert u2.moment(m) == expected

    def test_functional_power_zero_is_base(self, hermite_pair):
        assert hermite_pair.functional_power(0) is hermite_pair.u


class TestPsiK:
    def test_k_zero(self, jacobi_pair):
        assert psi_k(jacobi_pair, 0) == jacobi_pair.psi

    def test_hermite_all_k(self, hermite_pair):
        for k in range(5):
            assert psi_k(hermite_pair, k) == Poly([0, -2])

    def test_jacobi_k_two(self, jacobi_pair):
        assert psi_k(jacobi_pair, 2) == Poly([Fraction(5, 3), Fraction(-25, 3)])


class TestRodriguesR1:
    def test_zero_polynomial(self, hermite_pair):
        assert rodrigues_r1(hermite_pair, 3, Poly.zero()) == Poly.zero()

    def test_hermite_step_on_one(self, hermite_pair):
        assert rodrigues_r1(hermite_pair, 1, Poly.one()) == Poly([0, -2])

    def test_laguerre_step_on_one(self, laguerre_pair):
        # psi + phi' = (alpha + 2) - x
        assert rodrigues_r1(laguerre_pair, 1, Poly.one()) == Poly([Fraction(5, 2), -1])

    def test_raises_degree_by_one(self, jacobi_pair):
        p = Poly([1, 2, 3])
        assert rodrigues_r1(jacobi_pair, 2, p).degree == 3

    @pytest.mark.parametrize("k", range(4))
    def test_defining_functional_identity(self, jacobi_pair, k):
        # q = R_1(p) at level k satisfies (p u_{k+1})' = q u_k, i.e.
        # -m <u_{k+1}, p x^(m-1)> = <u_k, q x^m> for every m.
        p = Poly([Fraction(1, 3), -2, 1])
        q = rodrigues_r1(jacobi_pair, k, p)
        up = jacobi_pair.functional_power(k + 1)
        low = jacobi_pair.functional_power(k)
        for m in range(8):
            lhs = -m * functional_apply(up, p * Poly.monomial(m - 1)) if m else Fraction(0)
            assert lhs == functional_apply(low, q * Poly.monomial(m))


class TestRodriguesRk:
    def test_k_zero_is_identity(self, bessel_pair):
        p = Poly([1, 1])
        assert rodrigues_rk(bessel_pair, 0, 4, p) == p

    def test_hermite_two_steps(self, hermite_pair):
        assert rodrigues_rk(hermite_pair, 2, 0, Poly.one()) == Poly([-2, 0, 4])

    def test_laguerre_top_row_form(self, laguerre_pair):
        # base n-1, one step on 1 gives (n-1) phi' + psi = (n + alpha) - x
        for n in (1, 3, 6):
            out = rodrigues_rk(laguerre_pair, 1, n - 1, Poly.one())
            assert out == Poly([n + ALPHA, -1])

    @pytest.mark.parametrize("k1,k2", [(1, 1), (2, 1), (1, 3), (2, 2)])
    def test_composition_splits(self, jacobi_pair, k1, k2):
        # The outer block acts at the lower base:
        # R_{k1+k2} at base 0 = (R_{k1} at base 0) after (R_{k2} at base k1).
        p = Poly([1, -1])
        whole = rodrigues_rk(jacobi_pair, k1 + k2, 0, p)
        split = rodrigues_rk(jacobi_pair, k1, 0, rodrigues_rk(jacobi_pair, k2, k1, p))
        assert whole == split

    def test_degree_growth_on_one(self, bessel_pair):
        for k in range(5):
            assert rodrigues_rk(bessel_pair, k, 1, Poly.one()).degree == k


class TestComplementary:
    def test_hermite_diagonal_n2(self, hermite_pair):
        assert complementary(hermite_pair, 2, 2) == Poly([-2, 0, 4])

    def test_laguerre_diagonal_n2(self, laguerre_pair):
        expected = Poly([(ALPHA + 1) * (ALPHA + 2), -(2 * ALPHA + 4), 1])
        assert complementary(laguerre_pair, 2, 2) == expected

    def test_row_zero_is_one(self, jacobi_pair):
        assert complementary(jacobi_pair, 7, 0) == Poly.one()

    def test_bounds(self, hermite_pair):
        with pytest.raises(IndexError):
            complementary(hermite_pair, 2, 3)
        with pytest.raises(IndexError):
            complementary(hermite_pair, 2, -1)
        with pytest.raises(IndexError):
            complementary(hermite_pair, -1, 0)

    def test_degree_equals_nu(self, bessel_pair):
        for n in range(7):
            for nu in range(n + 1):
                assert complementary(bessel_pair, n, nu).degree == nu

    def test_equals_operator_construction(self, family_pairs):
        for pair in family_pairs.values():
            for n in range(9):
                for nu in range(n + 1):
                    rec = complementary(pair, n, nu)
                    op = rodrigues_rk(pair, nu, n - nu, Poly.one())
                    assert rec == op


class TestCompTable:
    def test_n_zero(self, hermite_pair):
        table = complementary_table(hermite_pair, 0)
        assert table.rows == (Poly.one(),)
        assert table.b_n == 1

    def test_hermite_n2_rows(self, hermite_pair):
        table = complementary_table(hermite_pair, 2)
        assert table.rows == (Poly.one(), Poly([0, -2]), Poly([-2, 0, 4]))

    def test_jacobi_n1_rows(self, jacobi_pair):
        table = complementary_table(jacobi_pair, 1)
        assert table.rows == (Poly.one(), Poly([Fraction(5, 3), Fraction(-13, 3)]))

    def test_rows_match_single_row_accessor(self, laguerre_pair):
        table = complementary_table(laguerre_pair, 5)
        for nu in range(6):
            assert table.rows[nu] == complementary(laguerre_pair, 5, nu)


class TestClassicalOracles:
    def test_hermite_diagonal_is_signed_hermite(self, hermite_pair):
        for n in range(9):
            expected = oracles.hermite_poly(n)
            if n % 2 == 1:
                expected = -expected
            assert complementary(hermite_pair, n, n) == expected

    def test_laguerre_diagonal_is_scaled_laguerre(self, laguerre_pair):
        for n in range(9):
            expected = math.factorial(n) * oracles.laguerre_poly(n, ALPHA)
            assert complementary(laguerre_pair, n, n) == expected

    def test_jacobi_diagonal_leading_coefficient(self, jacobi_pair):
        for n in range(9):
            lc = complementary(jacobi_pair, n, n).leading_coefficient if n else Fraction(1)
            expected = oracles.rising(JA + JB + n + 1, n)
            if n % 2 == 1:
                expected = -expected
            assert lc == expected

    def test_bessel_diagonal_leading_coefficient(self, bessel_pair):
        for n in range(9):
            lc = complementary(bessel_pair, n, n).leading_coefficient if n else Fraction(1)
            assert lc == oracles.rising(1 + n + 1, n)

    def test_against_sympy_classical_polynomials(self, hermite_pair, laguerre_pair, jacobi_pair):
        sympy = pytest.importorskip("sympy")
        x = sympy.Symbol("x")

        def coeffs(expr):
            asc = list(reversed(sympy.Poly(sympy.expand(expr), x).all_coeffs()))
            return Poly([Fraction(c.p, c.q) for c in asc])

        for n in range(1, 7):
            sign = -1 if n % 2 == 1 else 1
            assert complementary(hermite_pair, n, n) == sign * coeffs(sympy.hermite(n, x))
            lag = sympy.factorial(n) * sympy.assoc_laguerre(n, sympy.Rational(1, 2), x)
            assert complementary(laguerre_pair, n, n) == coeffs(lag)
            jac = coeffs(sympy.jacobi(n, sympy.Rational(1, 3), 2, x))
            assert complementary(jacobi_pair, n, n).monic() == jac.monic()


class TestEigenvalues:
    def test_lambda_zero(self, bessel_pair):
        assert lambda_n(bessel_pair, 0) == 0

    def test_lambda_hermite_n5(self, hermite_pair):
        assert lambda_n(hermite_pair, 5) == 10

    def test_lambda_jacobi_n3(self, jacobi_pair):
        assert lambda_n(jacobi_pair, 3) == 3 * (JA + JB + 4)

    def test_mu_nu_zero(self, laguerre_pair):
        assert mu_eigenvalue(laguerre_pair, 6, 0) == 0

    def test_mu_hermite(self, hermite_pair):
        for n in range(1, 7):
            for nu in range(n + 1):
                assert mu_eigenvalue(hermite_pair, n, nu) == 2 * nu

    def test_mu_jacobi_closed_form(self, jacobi_pair):
        for n in range(1, 7):
            for nu in range(n + 1):
                expected = nu * (2 * n - nu + JA + JB + 1)
                assert mu_eigenvalue(jacobi_pair, n, nu) == expected

    def test_mu_diagonal_collapses_to_lambda(self, family_pairs):
        for pair in family_pairs.values():
            for n in range(9):
                assert mu_eigenvalue(pair, n, n) == lambda_n(pair, n)

    def test_mu_bounds(self, hermite_pair):
        with pytest.raises(IndexError):
            mu_eigenvalue(hermite_pair, 2, 3)


class TestOdeResidual:
    def test_nu_zero(self, jacobi_pair):
        assert ode_residual(jacobi_pair, 5, 0) == Poly.zero()

    def test_hermite_spot(self, hermite_pair):
        assert ode_residual(hermite_pair, 3, 2) == Poly.zero()

    def test_jacobi_spot(self, jacobi_pair):
        assert ode_residual(jacobi_pair, 4, 3) == Poly.zero()

    def test_full_small_grid(self, family_pairs):
        for pair in family_pairs.values():
            for n in range(7):
                for nu in range(n + 1):
                    assert ode_residual(pair, n, nu) == Poly.zero()


class TestSturmLiouville:
    def test_nu_zero(self, hermite_pair):
        assert sturm_liouville_residual(hermite_pair, 4, 0, 6) == [0] * 7

    def test_hermite_spot(self, hermite_pair):
        assert sturm_liouville_residual(hermite_pair, 2, 1, 4) == [0] * 5

    def test_laguerre_spot(self, laguerre_pair):
        assert sturm_liouville_residual(laguerre_pair, 3, 2, 6) == [0] * 7

    def test_small_grid(self, family_pairs):
        for pair in family_pairs.values():
            for n in range(6):
                for nu in range(n + 1):
                    depth = 2 * n + 4
                    assert sturm_liouville_residual(pair, n, nu, depth) == [0] * (depth + 1)


class TestRodriguesFormulaResidual:
    def test_identity_case(self, bessel_pair):
        assert rodrigues_formula_residual(bessel_pair, 4, 2, 2, 6) == [0] * 7

    def test_hermite_spot(self, hermite_pair):
        assert rodrigues_formula_residual(hermite_pair, 2, 1, 0, 4) == [0] * 5

    def test_legendre_spot(self, legendre_pair):
        assert rodrigues_formula_residual(legendre_pair, 3, 2, 1, 6) == [0] * 7

    def test_small_grid(self, family_pairs):
        for pair in family_pairs.values():
            for n in range(6):
                for nu in range(n + 1):
                    for mu in range(nu + 1):
                        depth = 2 * n + 4
                        res = rodrigues_formula_residual(pair, n, nu, mu, depth)
                        assert res == [0] * (depth + 1)

    def test_bounds(self, hermite_pair):
        with pytest.raises(IndexError):
            rodrigues_formula_residual(hermite_pair, 3, 2, 3, 4)
        with pytest.raises(IndexError):
            rodrigues_formula_residual(hermite_pair, 3, 4, 0, 4)


class TestDerivativeProportionality:
    def test_nu_zero(self, jacobi_pair):
        assert derivative_proportionality(jacobi_pair, 5, 0) == 1

    def test_hermite_spot(self, hermite_pair):
        assert derivative_proportionality(hermite_pair, 3, 1) == Fraction(-1, 6)

    def test_laguerre_spot(self, laguerre_pair):
        ratio = derivative_proportionality(laguerre_pair, 2, 1)
        assert ratio == Fraction(-1, 2)

    def test_ratio_is_product_of_ladder_eigenvalues(self, family_pairs):
        for pair in family_pairs.values():
            for n in range(1, 8):
                for nu in range(n + 1):
                    prod = Fraction(1)
                    for j in range(n - nu + 1, n + 1):
                        prod *= -mu_eigenvalue(pair, n, j)
                    assert derivative_proportionality(pair, n, nu) == 1 / prod

    def test_bounds(self, hermite_pair):
        with pytest.raises(IndexError):
            derivative_proportionality(hermite_pair, 2, 3)


class TestLeadingCoeffProbe:
    def test_hermite_constant(self, hermite_pair):
        for k in range(4):
            for m in range(4):
                assert leading_coeff_probe(hermite_pair, k, m) == -2

    def test_laguerre_constant(self, laguerre_pair):
        for k in range(4):
            for m in range(4):
                assert leading_coeff_probe(laguerre_pair, k, m) == -1

    def test_jacobi_spot(self, jacobi_pair):
        assert leading_coeff_probe(jacobi_pair, 1, 0) == -(JA + JB + 4)

    def test_expansion_formula(self, family_pairs):
        # psi' + (m + 2k) phi''/2 from expanding phi (x^m)' + psi_k x^m
        for pair in family_pairs.values():
            dpsi = pair.psi.coefficient(1)
            ddphi = 2 * pair.phi.coefficient(2)
            for k in range(5):
                for m in range(5):
                    expected = dpsi + Fraction(m + 2 * k, 2) * ddphi
                    assert leading_coeff_probe(pair, k, m) == expected

    def test_eigenvalue_index_offset(self, family_pairs):
        # The probe value equals -lambda_{s+1}/(s+1) at s = m + 2k, which
        # only coincides with -lambda_s/s when phi'' = 0.
        for pair in family_pairs.values():
            for k in range(4):
                for m in range(4):
                    s = m + 2 * k
                    value = leading_coeff_probe(pair, k, m)
                    assert value == -lambda_n(pair, s + 1) / (s + 1)
