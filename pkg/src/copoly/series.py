"""Truncated power series in ``y`` whose coefficients are polynomials in ``x``.

``SeriesYX`` fixes a truncation order ``N`` and stores exactly ``N + 1``
``Poly`` coefficients: the entry at index ``nu`` is the coefficient of
``y**nu``.  All arithmetic truncates back to the carried order.  Combining
two series of different orders raises ``ValueError`` instead of silently
coercing; a truncation order is part of the meaning of the value, not a
display choice.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .poly import Poly, as_poly, as_rational


class SeriesYX:
    """Power series in ``y`` truncated at a fixed order, one ``Poly`` per power."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: Iterable[Poly | int | str | Fraction] = ()):
        if order < 0:
            raise ValueError("series order must be >= 0")
        polys = [as_poly(c) for c in coeffs]
        if len(polys) > order + 1:
            raise ValueError(f"got {len(polys)} coefficients for truncation order {order}")
        polys.extend(Poly.zero() for _ in range(order + 1 - len(polys)))
        self._order = order
        self._coeffs = tuple(polys)

    @classmethod
    def zero(cls, order: int) -> SeriesYX:
        return cls(order)

    @classmethod
    def one(cls, order: int) -> SeriesYX:
        return cls(order, (Poly.one(),))

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Poly, ...]:
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self._coeffs)

    def coeff(self, nu: int) -> Poly:
        """Coefficient of ``y**nu``; beyond the order it is unknown, not zero."""
        if nu < 0 or nu > self._order:
            raise IndexError(f"coefficient index {nu} outside truncation order {self._order}")
        return self._coeffs[nu]

    def truncate(self, order: int) -> SeriesYX:
        """Drop to a lower order; raising the order would invent coefficients."""
        if order > self._order:
            raise ValueError(f"cannot extend order {self._order} series to order {order}")
        return SeriesYX(order, self._coeffs[: order + 1])

    def _check_order(self, other: SeriesYX) -> None:
        if self._order != other._order:
            raise ValueError(
                f"series truncation orders differ: {self._order} vs {other._order}"
            )

    def __add__(self, other) -> SeriesYX:
        if not isinstance(other, SeriesYX):
            return NotImplemented
        self._check_order(other)
        return SeriesYX(self._order, tuple(a + b for a, b in zip(self._coeffs, other._coeffs)))

    def __sub__(self, other) -> SeriesYX:
        if not isinstance(other, SeriesYX):
            return NotImplemented
        self._check_order(other)
        return SeriesYX(self._order, tuple(a - b for a, b in zip(self._coeffs, other._coeffs)))

    def __neg__(self) -> SeriesYX:
        return SeriesYX(self._order, tuple(-c for c in self._coeffs))

    def _scale(self, factor: Poly) -> SeriesYX:
        return SeriesYX(self._order, tuple(factor * c for c in self._coeffs))

    def __mul__(self, other) -> SeriesYX:
        if isinstance(other, SeriesYX):
            self._check_order(other)
            n = self._order
            out = [Poly.zero() for _ in range(n + 1)]
            for i, a in enumerate(self._coeffs):
                if a.is_zero:
                    continue
                for j in range(n + 1 - i):
                    b = other._coeffs[j]
                    if not b.is_zero:
                        out[i + j] = out[i + j] + a * b
            return SeriesYX(n, out)
        if isinstance(other, Poly):
            return self._scale(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._scale(Poly.constant(other))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, power: int) -> SeriesYX:
        if not isinstance(power, int) or power < 0:
            raise ValueError("series powers must be nonnegative integers")
        out = SeriesYX.one(self._order)
        for _ in range(power):
            out = out * self
        return out

    def differentiate_y(self) -> SeriesYX:
        """d/dy; the result carries order ``N - 1`` since the top term is lost."""
        if self._order == 0:
            raise ValueError("cannot differentiate an order-0 series in y")
        return SeriesYX(
            self._order - 1,
            tuple((nu + 1) * c for nu, c in enumerate(self._coeffs[1:])),
        )

    def differentiate_x(self) -> SeriesYX:
        return SeriesYX(self._order, tuple(c.derivative() for c in self._coeffs))

    def evaluate(self, x0: int | str | Fraction, y0: int | str | Fraction) -> Fraction:
        """Exact value of the truncated sum at a rational point."""
        y = as_rational(y0)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * y + c(x0)
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesYX):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        return f"SeriesYX(order={self._order}, coeffs={list(self._coeffs)!r})"

    def __str__(self) -> str:
        parts = [f"({c})*y^{nu}" for nu, c in enumerate(self._coeffs) if not c.is_zero]
        return " + ".join(parts) if parts else "0"


def series_mul(a: SeriesYX, b: SeriesYX) -> SeriesYX:
    """Cauchy product truncated to the common order of ``a`` and ``b``."""
    return a * b


def poly_shift_substitute(p: Poly, q: Poly, order: int) -> SeriesYX:
    """Expand ``p(x + y*q(x))`` as a series in ``y``.

    The coefficient of ``y**j`` is ``q**j * p^(j) / j!``, so the expansion is
    exact (all higher terms vanish) once ``order >= deg p``.
    """
    coeffs = []
    deriv = p
    qpow = Poly.one()
    fact = 1
    for j in range(order + 1):
        if j > 0:
            deriv = deriv.derivative()
            qpow = qpow * q
            fact *= j
        coeffs.append((deriv * qpow) / fact)
    return SeriesYX(order, coeffs)


def series_exp(s: SeriesYX) -> SeriesYX:
    """Exponential ``sum(s**k / k!)`` of a series with zero constant term.

    The constant-term restriction makes the sum finite order by order:
    ``s**k`` contributes nothing below ``y**k``.
    """
    if not s.coeff(0).is_zero:
        raise ValueError("series_exp needs a zero constant term")
    n = s.order
    out = SeriesYX.one(n)
    acc = SeriesYX.one(n)
    fact = 1
    for k in range(1, n + 1):
        acc = acc * s
        fact *= k
        out = out + acc * Fraction(1, fact)
    return out


def series_pow_rational(s: SeriesYX, alpha: int | str | Fraction) -> SeriesYX:
    """Binomial power ``s**alpha`` for rational ``alpha``.

    Requires constant term exactly 1; then ``(1 + t)**alpha`` with
    ``t = s - 1`` truncates cleanly because ``t`` has no constant term.
    For nonnegative integer ``alpha`` this reproduces the plain power.
    """
    a = as_rational(alpha)
    if s.coeff(0) != Poly.one():
        raise ValueError("series_pow_rational needs constant term 1")
    n = s.order
    t = s - SeriesYX.one(n)
    out = SeriesYX.one(n)
    acc = SeriesYX.one(n)
    binom = Fraction(1)
    for k in range(1, n + 1):
        binom *= (a - (k - 1)) / k
        acc = acc * t
        if binom != 0:
            out = out + acc * binom
    return out
