"""Dense univariate polynomials over the rationals.

The scalar field everywhere in this package is ``fractions.Fraction``:
arbitrary precision, always reduced, positive denominator.  ``Poly`` stores
coefficients densely by ascending power of ``x`` with no trailing zeros, so
two polynomials are equal exactly when their coefficient tuples are equal.
The zero polynomial is the empty tuple and reports degree ``-inf``, keeping
degree bookkeeping honest without a fake ``-1``.

Floats are rejected everywhere: there is no rounding anywhere in this
package, and accepting a float would silently launder binary approximation
into "exact" arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]

NEG_INF = -math.inf


def as_rational(value: int | str | Fraction) -> Fraction:
    """Coerce to an exact ``Fraction``; accepts ints and ``"p/q"`` text."""
    if isinstance(value, (float, bool)):
        raise TypeError(f"refusing {value!r}; pass int, Fraction or 'p/q' text")
    return Fraction(value)


class Poly:
    """Immutable polynomial in ``x`` with exact rational coefficients.

    Every operation returns a new canonical ``Poly`` (no trailing zero
    coefficients).  Arithmetic mixes freely with ``int`` and ``Fraction``
    scalars, which are treated as constant polynomials.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int | str | Fraction] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def constant(cls, value: int | str | Fraction) -> Poly:
        return cls((as_rational(value),))

    @classmethod
    def monomial(cls, power: int, coeff: int | str | Fraction = 1) -> Poly:
        if power < 0:
            raise ValueError("monomial power must be >= 0")
        return cls((0,) * power + (as_rational(coeff),))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; ``-inf`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coefficient(self, power: int) -> Fraction:
        """Coefficient of ``x**power``; zero beyond the degree."""
        if power < 0:
            raise IndexError("coefficient power must be >= 0")
        if power >= len(self._coeffs):
            return Fraction(0)
        return self._coeffs[power]

    def derivative(self, order: int = 1) -> Poly:
        if order < 0:
            raise ValueError("derivative order must be >= 0")
        cs = self._coeffs
        for _ in range(order):
            cs = tuple(i * c for i, c in enumerate(cs) if i > 0)
        return Poly(cs)

    def monic(self) -> Poly:
        return self / self.leading_coefficient

    def __call__(self, point: int | str | Fraction) -> Fraction:
        value = as_rational(point)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.constant(other)
        return None

    def __add__(self, other) -> Poly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._coeffs, rhs._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> Poly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> Poly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other) -> Poly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._coeffs, rhs._coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> Poly:
        c = as_rational(scalar)
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (Fraction(1) / c)

    def __pow__(self, power: int) -> Poly:
        if not isinstance(power, int) or power < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        out = Poly.one()
        for _ in range(power):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._coeffs == rhs._coeffs

    def __hash__(self) -> int:
        # Constants hash like their scalar value so Poly([3]) == 3 stays
        # consistent with the hash contract.
        if len(self._coeffs) <= 1:
            return hash(self._coeffs[0] if self._coeffs else Fraction(0))
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        # Ascending powers; the output re-parses through parse_poly_expr.
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)


def as_poly(value: Poly | int | str | Fraction) -> Poly:
    """Coerce scalars to constant polynomials; pass ``Poly`` through."""
    if isinstance(value, Poly):
        return value
    return Poly.constant(value)


def poly_derivative(p: Poly) -> Poly:
    """Formal derivative d/dx."""
    return p.derivative()
