"""Exponential generating function of the complementary rows, two ways.

The series ``G(y, x; n) = sum_nu y**nu / nu! * C_nu(x; n)`` can be built
directly from the row recursion (continued past ``nu = n``), or in closed
form as

    G(y, x; n) = (phi(x + y phi) / phi)**n * rho(x + y phi) / rho(x)

where ``rho`` is the weight solving the family's Pearson equation.  Both
factors truncate exactly: the first is ``(1 + y phi' + y^2 phi'' phi / 2)**n``
because ``phi`` is at most quadratic, and the weight ratio has an explicit
elementary form per catalog family (for example ``exp(-2xy - y**2)`` for
hermite).  The two constructions agree coefficient by coefficient, and the
series satisfies a family of first-order identities in ``y`` and ``x`` whose
residuals are computed here as truncated series that vanish identically.

Identity selectors for :func:`pde_residual` (all linear, first order):

* ``y_self``:  ``(1 + y phi' + y^2 phi'' phi/2) dG/dy = (C_1 + y phi C_1') G``
* ``y_lower``: ``dG/dy = ((n-1) phi'(x + y phi) + psi(x + y phi)) G(y, x; n-1)``
* ``x_self``:  ``(1 + y phi' + y^2 phi'' phi/2) dG/dx
  = ((1 + y phi') C_1' - y phi'' C_1 / 2) y G``
* ``x_lower``: ``phi dG/dx = (1 + y phi')(psi + (n-1) phi'
  + y phi (psi' + (n-1) phi'')) G(y, x; n-1) - (psi + (n-1) phi') G``
* ``master``:  ``phi(x + y phi) dG/dy
  = phi (psi(x + y phi) + (n-1) phi'(x + y phi)) G``

where ``C_1 = C_1(x; n) = (n-1) phi' + psi`` and shifted arguments expand by
Taylor: ``phi'(x + y phi) = phi' + y phi'' phi`` and
``psi(x + y phi) = psi + y psi' phi``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownEquation, UnsupportedFamily
from .poly import Poly
from .rodrigues import ClassicalPair, FamilySpec, _comp_rows
from .series import SeriesYX, poly_shift_substitute, series_exp, series_pow_rational

PDE_IDENTITIES = ("y_self", "y_lower", "x_self", "x_lower", "master")

_FACTORIALS = [1]


def _factorial(n: int) -> int:
    while len(_FACTORIALS) <= n:
        _FACTORIALS.append(_FACTORIALS[-1] * len(_FACTORIALS))
    return _FACTORIALS[n]


def genfun_truncated(pair: ClassicalPair, n: int, order: int) -> SeriesYX:
    """Generating series through ``y**order`` from the row recursion.

    Rows beyond ``nu = n`` keep following the recursion with coefficient
    ``n - nu - 1`` gone negative; those are exactly the higher coefficients
    of the closed form.
    """
    rows = _comp_rows(pair, n, order)
    return SeriesYX(order, [row / _factorial(nu) for nu, row in enumerate(rows)])


def _quadratic_prefactor(pair: ClassicalPair, order: int) -> SeriesYX:
    phi = pair.phi
    phi2 = phi.coefficient(2) * 2
    coeffs = [Poly.one(), phi.derivative(), phi * phi2 / 2]
    return SeriesYX(order, coeffs[: order + 1])


def genfun_phi_factor(pair: ClassicalPair, n: int, order: int) -> SeriesYX:
    """``(phi(x + y phi)/phi)**n = (1 + y phi' + y^2 phi'' phi / 2)**n``."""
    return series_pow_rational(_quadratic_prefactor(pair, order), n)


def weight_ratio_series(family: FamilySpec, order: int) -> SeriesYX:
    """``rho(x + y phi) / rho(x)`` for a catalog family, exactly truncated.

    hermite: ``exp(-2xy - y^2)``
    laguerre: ``(1+y)^alpha exp(-xy)``
    jacobi:   ``(1 - y(1+x))^alpha (1 + y(1-x))^beta``
    bessel:   ``(1 + yx)^alpha exp(2y / (1 + yx))``
    """
    n = order
    if family.name == "hermite":
        arg = SeriesYX(n, [Poly.zero(), Poly([0, -2]), Poly([-1])][: n + 1])
        return series_exp(arg)
    if family.name == "laguerre":
        alpha = family.params["alpha"]
        pow_part = series_pow_rational(SeriesYX(n, [Poly.one(), Poly.one()][: n + 1]), alpha)
        exp_part = series_exp(SeriesYX(n, [Poly.zero(), Poly([0, -1])][: n + 1]))
        return pow_part * exp_part
    if family.name == "jacobi":
        alpha, beta = family.params["alpha"], family.params["beta"]
        left = series_pow_rational(SeriesYX(n, [Poly.one(), Poly([-1, -1])][: n + 1]), alpha)
        right = series_pow_rational(SeriesYX(n, [Poly.one(), Poly([1, -1])][: n + 1]), beta)
        return left * right
    if family.name == "bessel":
        alpha = family.params["alpha"]
        one_plus_xy = SeriesYX(n, [Poly.one(), Poly([0, 1])][: n + 1])
        pow_part = series_pow_rational(one_plus_xy, alpha)
        inv = series_pow_rational(one_plus_xy, -1)
        two_y = SeriesYX(n, [Poly.zero(), Poly([2])][: n + 1])
        return pow_part * series_exp(two_y * inv)
    raise UnsupportedFamily(f"no closed-form weight ratio for family {family.name!r}")


def genfun_closed_form(pair: ClassicalPair, n: int, order: int) -> SeriesYX:
    """Closed form: quadratic prefactor to the ``n`` times the weight ratio."""
    family = FamilySpec(pair.name, pair.phi, pair.psi, dict(pair.params))
    return genfun_phi_factor(pair, n, order) * weight_ratio_series(family, order)


def pde_residual(pair: ClassicalPair, n: int, which: str, order: int) -> SeriesYX:
    """Residual of one of the generating-series identities.

    The series is built at truncation ``order``; differentiating in ``y``
    loses the top coefficient, so the residual is returned (and vanishes) at
    order ``order - 1``.  The ``*_lower`` identities relate ``n`` to
    ``n - 1`` and therefore need ``n >= 1``.
    """
    if which not in PDE_IDENTITIES:
        raise UnknownEquation(
            f"unknown identity {which!r}; expected one of {', '.join(PDE_IDENTITIES)}")
    if order < 2:
        raise ValueError("order must be >= 2 to leave room for d/dy")
    if which in ("y_lower", "x_lower") and n < 1:
        raise ValueError(f"identity {which!r} involves n - 1 and needs n >= 1")

    m = order - 1
    phi, psi = pair.phi, pair.psi
    dphi = phi.derivative()
    phi2 = phi.coefficient(2) * 2
    psi1 = psi.coefficient(1)
    c1 = psi + (n - 1) * dphi
    c1d = c1.derivative()

    full = genfun_truncated(pair, n, order)
    g = full.truncate(m)
    dy = full.differentiate_y()
    dx = full.differentiate_x().truncate(m)
    prefactor = _quadratic_prefactor(pair, m)

    if which == "y_self":
        bracket = SeriesYX(m, [c1, phi * c1d][: m + 1])
        return prefactor * dy - bracket * g
    if which == "y_lower":
        lower = genfun_truncated(pair, n - 1, m)
        coeff = poly_shift_substitute(psi, phi, m) \
            + (n - 1) * poly_shift_substitute(dphi, phi, m)
        return dy - coeff * lower
    if which == "x_self":
        bracket = SeriesYX(m, [c1d, dphi * c1d - c1 * phi2 / 2][: m + 1])
        y = SeriesYX(m, [Poly.zero(), Poly.one()])
        return prefactor * dx - bracket * y * g
    if which == "x_lower":
        lower = genfun_truncated(pair, n - 1, m)
        outer = SeriesYX(m, [Poly.one(), dphi][: m + 1])
        inner = SeriesYX(m, [c1, phi * (psi1 + (n - 1) * phi2)][: m + 1])
        return phi * dx - outer * inner * lower + c1 * g
    # master
    phi_shifted = poly_shift_substitute(phi, phi, m)
    coeff = poly_shift_substitute(psi, phi, m) \
        + (n - 1) * poly_shift_substitute(dphi, phi, m)
    return phi_shifted * dy - phi * (coeff * g)


@dataclass(frozen=True)
class GenFunInstance:
    """A pair with its truncated generating series, kept together.

    ``series.coeff(nu) * nu!`` reproduces row ``nu`` of the (continued)
    complementary recursion.
    """

    pair: ClassicalPair
    n: int
    order: int
    series: SeriesYX

    @classmethod
    def build(cls, pair: ClassicalPair, n: int, order: int) -> GenFunInstance:
        return cls(pair, n, order, genfun_truncated(pair, n, order))
