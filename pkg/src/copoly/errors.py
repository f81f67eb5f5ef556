"""Exception types shared across the package."""

from __future__ import annotations


class CopolyError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameter(CopolyError, ValueError):
    """A family parameter or polynomial violates a structural constraint."""


class AdmissibilityViolation(CopolyError):
    """The Pearson moment recurrence degenerates at some order.

    The offending index is available as ``k``: it is the first index with
    ``psi' + k*phi''/2 == 0``, where the recurrence for the next moment
    would divide by zero.
    """

    def __init__(self, k: int, message: str | None = None):
        self.k = k
        super().__init__(message or f"admissibility fails: psi' + k*phi''/2 = 0 at k = {k}")


class NotQuasiDefinite(CopolyError):
    """The moment functional admits no orthogonal sequence at the requested depth.

    ``level`` is the order of the first vanishing Hankel determinant.
    """

    def __init__(self, level: int, message: str | None = None):
        self.level = level
        super().__init__(message or f"Hankel determinant of order {level} vanishes")


class MismatchError(CopolyError):
    """Two constructions that must agree exactly do not."""

    def __init__(self, degree: int, message: str | None = None):
        self.degree = degree
        super().__init__(message or f"constructions disagree at degree {degree}")


class NotProportional(CopolyError):
    """Two polynomials expected to be scalar multiples of each other are not."""


class UnsupportedFamily(CopolyError):
    """The operation needs a catalog family with a known closed-form weight."""


class UnknownEquation(CopolyError, ValueError):
    """Unrecognized identity selector."""


class ExprSyntaxError(CopolyError):
    """Malformed polynomial expression; offending position in ``position``."""

    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class UnknownIdentifier(CopolyError):
    """An identifier in a polynomial expression has no binding."""

    def __init__(self, name: str, position: int):
        self.name = name
        self.position = position
        super().__init__(f"unknown identifier {name!r} (at position {position})")
