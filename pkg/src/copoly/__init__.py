"""Complementary polynomials of classical orthogonal families, exactly.

Given a pair ``(phi, psi)`` with ``deg phi <= 2`` and ``deg psi = 1``, the
Pearson equation ``(phi u)' = psi u`` determines a moment functional ``u``.
Iterating a first-order Rodrigues operator against the shifted functionals
``u_k = phi**k u`` produces the complementary polynomials ``C_nu(x; n)``,
whose diagonal recovers the classical orthogonal polynomials (Hermite,
Laguerre, Jacobi, Bessel).  Everything runs over ``fractions.Fraction``:
identities are verified as exactly-zero polynomials, moment sequences, or
truncated series, never to a tolerance.
"""

from .errors import (
    AdmissibilityViolation,
    CopolyError,
    ExprSyntaxError,
    InvalidParameter,
    MismatchError,
    NotProportional,
    NotQuasiDefinite,
    UnknownEquation,
    UnknownIdentifier,
    UnsupportedFamily,
)
from .functional import (
    MomentFunctional,
    PearsonData,
    functional_apply,
    functional_derivative,
    functional_div_linear,
    functional_poly_mul,
    hankel_determinant,
    leibniz_residual,
    moments_from_pearson,
    pearson_residual,
)
from .genfun import (
    PDE_IDENTITIES,
    GenFunInstance,
    genfun_closed_form,
    genfun_phi_factor,
    genfun_truncated,
    pde_residual,
    weight_ratio_series,
)
from .oracle import (
    CrossCheckReport,
    MonicOPS,
    cross_validate,
    gram_schmidt_ops,
    orthogonality_matrix,
    three_term_coefficients,
)
from .parsing import parse_poly_expr
from .poly import Poly, Rational, as_poly, as_rational, poly_derivative
from .rodrigues import (
    CATALOG,
    ClassicalPair,
    CompTable,
    FamilySpec,
    bessel_family,
    complementary,
    complementary_table,
    custom_family,
    derivative_proportionality,
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
from .series import (
    SeriesYX,
    poly_shift_substitute,
    series_exp,
    series_mul,
    series_pow_rational,
)
from .verify import SUITE_NAMES, SuiteResult, VerifyReport, verify_pair

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityViolation",
    "CATALOG",
    "ClassicalPair",
    "CompTable",
    "CopolyError",
    "CrossCheckReport",
    "ExprSyntaxError",
    "FamilySpec",
    "GenFunInstance",
    "InvalidParameter",
    "MismatchError",
    "MomentFunctional",
    "MonicOPS",
    "NotProportional",
    "NotQuasiDefinite",
    "PDE_IDENTITIES",
    "PearsonData",
    "Poly",
    "Rational",
    "SUITE_NAMES",
    "SeriesYX",
    "SuiteResult",
    "UnknownEquation",
    "UnknownIdentifier",
    "UnsupportedFamily",
    "VerifyReport",
    "as_poly",
    "as_rational",
    "bessel_family",
    "complementary",
    "complementary_table",
    "cross_validate",
    "custom_family",
    "derivative_proportionality",
    "functional_apply",
    "functional_derivative",
    "functional_div_linear",
    "functional_poly_mul",
    "genfun_closed_form",
    "genfun_phi_factor",
    "genfun_truncated",
    "gram_schmidt_ops",
    "hankel_determinant",
    "hermite_family",
    "jacobi_family",
    "laguerre_family",
    "lambda_n",
    "leading_coeff_probe",
    "leibniz_residual",
    "moments_from_pearson",
    "mu_eigenvalue",
    "ode_residual",
    "orthogonality_matrix",
    "pair_from_family",
    "parse_poly_expr",
    "pde_residual",
    "pearson_residual",
    "poly_derivative",
    "poly_shift_substitute",
    "psi_k",
    "rodrigues_formula_residual",
    "rodrigues_r1",
    "rodrigues_rk",
    "series_exp",
    "series_mul",
    "series_pow_rational",
    "sturm_liouville_residual",
    "three_term_coefficients",
    "verify_pair",
    "weight_ratio_series",
]
