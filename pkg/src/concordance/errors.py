"""Exception hierarchy shared across the library.

Every computational failure raises a subclass of ConcordanceError so the
CLI can distinguish bad input (usage) from bad math (computation).
"""

from __future__ import annotations


class ConcordanceError(Exception):
    """Base class for all library errors."""


class ZeroBase(ConcordanceError):
    """Integer evaluation at 0 of a polynomial with negative exponents."""


class NotNormalizable(ConcordanceError):
    """No unit multiple of the polynomial is palindromic with value 1 at t=1."""


class InvalidSeifertMatrix(ConcordanceError):
    """Matrix is not square of even dimension with det(V - V^T) = 1."""


class InvalidDeterminant(ConcordanceError):
    """Alexander polynomial at -1 is not congruent to 1 or 5 mod 8."""


class SingularEvaluation(ConcordanceError):
    """Signature requested at (or numerically near) a jump point.

    Carries the subexpression text and the scaled angle at which the
    regularity check failed, when known.
    """

    def __init__(self, message: str, *, expr_text: str | None = None,
                 theta: float | None = None):
        super().__init__(message)
        self.expr_text = expr_text
        self.theta = theta


class DimensionMismatch(ConcordanceError):
    """Vector/matrix shapes are incompatible."""


class ParseError(ConcordanceError):
    """Malformed textual input; `position` is a 0-based character offset."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ArityError(ConcordanceError):
    """Construction with the wrong number of arguments (sum arity, winding/companion counts)."""


class ClassificationFailure(ConcordanceError):
    """A reduced image word matched none of the expected suffix shapes."""
