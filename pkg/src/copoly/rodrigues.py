"""Classical pairs, the Rodrigues operator, and complementary polynomials.

For a pair ``(phi, psi)`` with ``deg phi <= 2`` and ``deg psi = 1`` whose
moment functional ``u`` satisfies the Pearson equation ``(phi u)' = psi u``,
the shifted functionals ``u_k = phi**k u`` satisfy Pearson equations with
``psi_k = psi + k phi'``.  The first-order Rodrigues operator with base
index ``k`` sends ``p`` to the unique polynomial ``q`` with

    (p u_{k+1})' = q u_k,        symbolically  q = phi p' + psi_k p.

Iterating it downward from base index ``n - 1`` builds the complementary
polynomials ``C_nu(x; n)``: degree-``nu`` rows of a triangular family whose
diagonal ``C_n(x; n)`` is, up to normalization, the classical orthogonal
polynomial of degree ``n`` for ``u``.  The rows obey

    C_0 = 1,    C_{nu+1} = phi C_nu' + (psi + (n - nu - 1) phi') C_nu,

a second-order differential equation with eigenvalue ``mu(n, nu)``, and a
family of functional identities relating ``C_nu u_{n-nu}`` to derivatives of
``C_mu u_{n-mu}``; the residual operations below state each identity as an
exactly-zero object.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import InvalidParameter, NotProportional
from .functional import (
    MomentFunctional,
    functional_derivative,
    functional_poly_mul,
    moments_from_pearson,
)
from .poly import Poly, as_rational

CATALOG = ("hermite", "laguerre", "jacobi", "bessel")


@dataclass
class FamilySpec:
    """Shape of a weight family: named pair pattern, parameters, seed moment."""

    name: str
    phi: Poly
    psi: Poly
    params: dict[str, Fraction] = field(default_factory=dict)
    u0: Fraction = Fraction(1)


def hermite_family() -> FamilySpec:
    """phi = 1, psi = -2x (weight exp(-x^2) on the line)."""
    return FamilySpec("hermite", Poly([1]), Poly([0, -2]))


def laguerre_family(alpha: int | str | Fraction) -> FamilySpec:
    """phi = x, psi = (alpha+1) - x (weight x^alpha exp(-x) on the half line)."""
    a = as_rational(alpha)
    return FamilySpec("laguerre", Poly([0, 1]), Poly([a + 1, -1]), {"alpha": a})


def jacobi_family(alpha: int | str | Fraction, beta: int | str | Fraction) -> FamilySpec:
    """phi = 1 - x^2, psi = (beta-alpha) - (alpha+beta+2)x (weight (1-x)^a (1+x)^b)."""
    a, b = as_rational(alpha), as_rational(beta)
    return FamilySpec("jacobi", Poly([1, 0, -1]), Poly([b - a, -(a + b + 2)]),
                      {"alpha": a, "beta": b})


def bessel_family(alpha: int | str | Fraction) -> FamilySpec:
    """phi = x^2, psi = (alpha+2)x + 2 (formal weight x^alpha exp(-2/x))."""
    a = as_rational(alpha)
    return FamilySpec("bessel", Poly([0, 0, 1]), Poly([2, a + 2]), {"alpha": a})


def custom_family(phi: Poly, psi: Poly, u0: int | str | Fraction = 1,
                  params: Mapping[str, Fraction] | None = None) -> FamilySpec:
    """User-supplied pair; no closed-form weight is attached to it."""
    return FamilySpec("custom", phi, psi, dict(params or {}), as_rational(u0))


class ClassicalPair:
    """A validated ``(phi, psi)`` pair with its moment functional.

    Immutable apart from internal memoization: the moment sequence of ``u``
    extends on demand, and the shifted functionals ``u_k = phi**k u`` are
    cached per index.
    """

    __slots__ = ("phi", "psi", "u", "name", "params", "_shifted")

    def __init__(self, phi: Poly, psi: Poly, u: MomentFunctional,
                 name: str = "custom", params: Mapping[str, Fraction] | None = None):
        if phi.degree > 2:
            raise InvalidParameter(f"phi must have degree <= 2, got degree {phi.degree}")
        if psi.degree != 1:
            raise InvalidParameter(f"psi must have degree exactly 1, got degree {psi.degree}")
        self.phi = phi
        self.psi = psi
        self.u = u
        self.name = name
        self.params = dict(params or {})
        self._shifted: dict[int, MomentFunctional] = {0: u}

    def functional_power(self, k: int) -> MomentFunctional:
        """The shifted functional ``u_k = phi**k u``."""
        if k < 0:
            raise IndexError("functional index must be >= 0")
        if k not in self._shifted:
            self._shifted[k] = functional_poly_mul(self.phi ** k, self.u)
        return self._shifted[k]

    def __repr__(self) -> str:
        return f"ClassicalPair({self.name!r}, phi={self.phi!r}, psi={self.psi!r})"


def pair_from_family(spec: FamilySpec, max_order: int) -> ClassicalPair:
    """Instantiate a family: generate its moments and bundle the pair.

    ``max_order`` sets how far admissibility is checked eagerly; moments
    themselves are generated lazily and may extend further.
    """
    u = moments_from_pearson(spec.phi, spec.psi, spec.u0, max_order)
    return ClassicalPair(spec.phi, spec.psi, u, spec.name, spec.params)


def psi_k(pair: ClassicalPair, k: int) -> Poly:
    """Pearson partner of the shifted functional: ``psi_k = psi + k phi'``."""
    return pair.psi + k * pair.phi.derivative()


def rodrigues_r1(pair: ClassicalPair, k: int, p: Poly) -> Poly:
    """One Rodrigues step at base index ``k``: ``p -> phi p' + psi_k p``.

    This is the polynomial ``q`` with ``(p u_{k+1})' = q u_k``.
    """
    return pair.phi * p.derivative() + psi_k(pair, k) * p


def rodrigues_rk(pair: ClassicalPair, k: int, base: int, p: Poly) -> Poly:
    """``k``-fold Rodrigues operator over base index ``base``.

    The composition applies single steps with base indices
    ``base + k - 1, ..., base + 1, base`` (innermost first); ``k = 0`` is the
    identity.
    """
    if k < 0:
        raise IndexError("iteration count must be >= 0")
    out = p
    for j in range(k):
        out = rodrigues_r1(pair, base + k - 1 - j, out)
    return out


def _comp_rows(pair: ClassicalPair, n: int, count: int) -> list[Poly]:
    # The recursion coefficient (n - nu - 1) goes negative past nu = n; that
    # continuation is what the generating series needs, so no bound check here.
    rows = [Poly.one()]
    phi, psi, dphi = pair.phi, pair.psi, pair.phi.derivative()
    for nu in range(count):
        p = rows[-1]
        rows.append(phi * p.derivative() + (psi + (n - nu - 1) * dphi) * p)
    return rows


def complementary(pair: ClassicalPair, n: int, nu: int) -> Poly:
    """Complementary polynomial ``C_nu(x; n)`` via the first-order recursion."""
    if nu < 0 or nu > n:
        raise IndexError(f"nu must satisfy 0 <= nu <= n, got nu={nu}, n={n}")
    return _comp_rows(pair, n, nu)[nu]


@dataclass(frozen=True)
class CompTable:
    """Full triangle row set ``C_0 .. C_n`` for one ``n``, with ``b_n = 1``.

    The normalization constant multiplying the diagonal is fixed to 1
    throughout this package; ``deg rows[nu] = nu`` whenever the pair is
    admissible over the range.
    """

    n: int
    rows: tuple[Poly, ...]
    b_n: Fraction = Fraction(1)


def complementary_table(pair: ClassicalPair, n: int) -> CompTable:
    """All rows ``C_0 .. C_n`` in one pass of the recursion."""
    if n < 0:
        raise IndexError("n must be >= 0")
    return CompTable(n, tuple(_comp_rows(pair, n, n)))


def lambda_n(pair: ClassicalPair, n: int) -> Fraction:
    """Second-order eigenvalue of the degree-``n`` orthogonal polynomial:
    ``-n psi' - n(n-1)/2 phi''``."""
    if n < 0:
        raise IndexError("n must be >= 0")
    psi1 = pair.psi.coefficient(1)
    phi2 = pair.phi.coefficient(2) * 2
    return -n * psi1 - Fraction(n * (n - 1), 2) * phi2


def mu_eigenvalue(pair: ClassicalPair, n: int, nu: int) -> Fraction:
    """Eigenvalue of row ``nu``: ``-nu ((n - (nu+1)/2) phi'' + psi')``.

    At ``nu = n`` this collapses to ``lambda_n``; at ``nu = 0`` it is zero.
    """
    if nu < 0 or nu > n:
        raise IndexError(f"nu must satisfy 0 <= nu <= n, got nu={nu}, n={n}")
    psi1 = pair.psi.coefficient(1)
    phi2 = pair.phi.coefficient(2) * 2
    return -nu * (Fraction(2 * n - nu - 1, 2) * phi2 + psi1)


def ode_residual(pair: ClassicalPair, n: int, nu: int) -> Poly:
    """Residual of the row differential equation; identically zero:

    ``phi C_nu'' + ((n - nu) phi' + psi) C_nu' + mu(n, nu) C_nu``.
    """
    p = complementary(pair, n, nu)
    return (pair.phi * p.derivative(2)
            + ((n - nu) * pair.phi.derivative() + pair.psi) * p.derivative()
            + mu_eigenvalue(pair, n, nu) * p)


def sturm_liouville_residual(pair: ClassicalPair, n: int, nu: int,
                             order: int) -> list[Fraction]:
    """Moments ``0..order`` of ``(C_nu' u_{n-nu+1})' + mu(n, nu) C_nu u_{n-nu}``.

    This is the self-adjoint (weighted) form of the row equation, stated at
    the functional level; every moment vanishes.
    """
    p = complementary(pair, n, nu)
    mu = mu_eigenvalue(pair, n, nu)
    lhs = functional_derivative(
        functional_poly_mul(p.derivative(), pair.functional_power(n - nu + 1)))
    rhs = mu * functional_poly_mul(p, pair.functional_power(n - nu))
    return (lhs + rhs).moments(order)


def rodrigues_formula_residual(pair: ClassicalPair, n: int, nu: int, mu: int,
                               order: int) -> list[Fraction]:
    """Moments ``0..order`` of ``C_nu u_{n-nu} - (d/dx)^(nu-mu) [C_mu u_{n-mu}]``.

    With ``mu = 0`` this is the Rodrigues formula for the rows
    (``C_nu u_{n-nu}`` equals the ``nu``-th derivative of ``u_n``); general
    ``mu`` interpolates between rows.  Every moment vanishes.
    """
    if not 0 <= mu <= nu <= n:
        raise IndexError(f"need 0 <= mu <= nu <= n, got mu={mu}, nu={nu}, n={n}")
    lhs = functional_poly_mul(complementary(pair, n, nu), pair.functional_power(n - nu))
    rhs = functional_poly_mul(complementary(pair, n, mu), pair.functional_power(n - mu))
    for _ in range(nu - mu):
        rhs = functional_derivative(rhs)
    return (lhs - rhs).moments(order)


def derivative_proportionality(pair: ClassicalPair, n: int, nu: int) -> Fraction:
    """Constant ``c`` with ``C_{n-nu}(x; n) = c * (d/dx)^nu C_n(x; n)``.

    Raises ``NotProportional`` if no exact constant exists (which would be an
    implementation bug for an admissible pair).
    """
    if nu < 0 or nu > n:
        raise IndexError(f"nu must satisfy 0 <= nu <= n, got nu={nu}, n={n}")
    deriv = complementary(pair, n, n).derivative(nu)
    target = complementary(pair, n, n - nu)
    if deriv.is_zero:
        raise NotProportional("the derivative vanished; no proportionality constant exists")
    ratio = target.leading_coefficient / deriv.leading_coefficient
    if target != ratio * deriv:
        raise NotProportional(
            f"C_{n - nu}(x; {n}) is not a scalar multiple of the {nu}-fold derivative")
    return ratio


def leading_coeff_probe(pair: ClassicalPair, k: int, m: int) -> Fraction:
    """Leading coefficient of one Rodrigues step on the monic probe ``x**m``.

    Expanding ``phi (x^m)' + psi_k x^m`` shows the top coefficient is
    ``psi' + (m + 2k) phi''/2``; the probe returns what the arithmetic
    actually produces, so the formula can be audited against it.
    """
    return rodrigues_r1(pair, k, Poly.monomial(m)).leading_coefficient
