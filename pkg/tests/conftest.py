from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from copoly import (
    Poly,
    bessel_family,
    hermite_family,
    jacobi_family,
    laguerre_family,
    pair_from_family,
)

settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")

# Depth 80 covers every moment index touched by the deepest residual in
# the acceptance grid (n = 12 at functional depth 2n + 4, shifted by
# deg(phi) * k for the phi^k functionals).
MOMENT_DEPTH = 80


@pytest.fixture(scope="session")
def hermite_pair():
    return pair_from_family(hermite_family(), max_order=MOMENT_DEPTH)


@pytest.fixture(scope="session")
def laguerre_pair():
    return pair_from_family(laguerre_family(Fraction(1, 2)), max_order=MOMENT_DEPTH)


@pytest.fixture(scope="session")
def jacobi_pair():
    return pair_from_family(jacobi_family(Fraction(1, 3), 2), max_order=MOMENT_DEPTH)


@pytest.fixture(scope="session")
def bessel_pair():
    return pair_from_family(bessel_family(1), max_order=MOMENT_DEPTH)


@pytest.fixture(scope="session")
def legendre_pair():
    return pair_from_family(jacobi_family(0, 0), max_order=MOMENT_DEPTH)


@pytest.fixture(scope="session")
def family_pairs(hermite_pair, laguerre_pair, jacobi_pair, bessel_pair):
    """The four catalog pairs used throughout the acceptance grid."""
    return {
        "hermite": hermite_pair,
        "laguerre": laguerre_pair,
        "jacobi": jacobi_pair,
        "bessel": bessel_pair,
    }


def rationals(max_num: int = 12, max_den: int = 6) -> st.SearchStrategy[Fraction]:
    return st.fractions(
        min_value=-max_num, max_value=max_num, max_denominator=max_den
    )


def small_polys(max_degree: int = 5) -> st.SearchStrategy[Poly]:
    return st.builds(
        Poly, st.lists(rationals(), min_size=0, max_size=max_degree + 1)
    )
