"""Text, JSON-string and LaTeX rendering of exact values."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from conftest import rationals, small_polys
from copoly import Poly, SeriesYX
from copoly.render import (
    poly_from_strings,
    poly_latex,
    poly_text,
    poly_to_strings,
    rational_from_str,
    rational_latex,
    rational_str,
    series_to_strings,
)


class TestRationalStrings:
    def test_fraction(self):
        assert rational_str(Fraction(3, 2)) == "3/2"

    def test_integer_has_no_denominator(self):
        assert rational_str(Fraction(-4)) == "-4"

    def test_from_str(self):
        assert rational_from_str("3/2") == Fraction(3, 2)
        assert rational_from_str("-7") == -7

    @given(rationals(50, 20))
    def test_round_trip(self, q):
        assert rational_from_str(rational_str(q)) == q


class TestPolyStrings:
    def test_ascending_coefficients(self):
        assert poly_to_strings(Poly([-2, 0, 4])) == ["-2", "0", "4"]

    def test_zero_is_empty(self):
        assert poly_to_strings(Poly.zero()) == []

    def test_from_strings(self):
        assert poly_from_strings(["-2", "0", "4"]) == Poly([-2, 0, 4])
        assert poly_from_strings([]) == Poly.zero()

    @given(small_polys())
    def test_round_trip(self, p):
        assert poly_from_strings(poly_to_strings(p)) == p

    def test_series(self):
        s = SeriesYX(1, [Poly.one(), Poly([0, -2])])
        assert series_to_strings(s) == [["1"], ["0", "-2"]]

    def test_text_matches_str(self):
        p = Poly([Fraction(3, 2), -2])
        assert poly_text(p) == str(p) == "3/2 - 2*x"


class TestLatex:
    def test_rational(self):
        assert rational_latex(Fraction(-3, 2)) == r"-\frac{3}{2}"
        assert rational_latex(Fraction(5)) == "5"

    def test_poly_descending(self):
        assert poly_latex(Poly([-2, 0, 4])) == "4 x^{2} - 2"

    def test_bare_x(self):
        assert poly_latex(Poly([0, 1])) == "x"

    def test_fractional_coefficients(self):
        p = Poly([Fraction(5, 3), Fraction(-13, 3)])
        assert poly_latex(p) == r"-\frac{13}{3} x + \frac{5}{3}"

    def test_zero(self):
        assert poly_latex(Poly.zero()) == "0"
