"""
Exception hierarchy for the amoeba toolkit.
"""

from typing import Optional, Tuple


class AmoebaError(Exception):
    """Base class for every error raised by the toolkit."""


class PolynomialSyntaxError(AmoebaError):
    """Polynomial text does not follow the grammar."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")


class ArityError(AmoebaError):
    """Too many variables, or mismatched arities."""


class EmptyPolynomialError(AmoebaError):
    """All terms cancelled or none were given."""


class ZeroCoordinateError(AmoebaError):
    """A zero coordinate met a negative exponent or a Log/Arg map."""


class DegreeError(AmoebaError):
    """Root finding asked for on a constant or all-zero coefficient list."""


class DimensionError(AmoebaError):
    """Operation is not defined for this number of variables."""


class NonRealCoefficientsError(AmoebaError):
    """Operation needs real coefficients."""


class UnknownFixtureError(AmoebaError):
    """Requested fixture name does not exist."""


class RootNearCircle(AmoebaError):
    """A root modulus lies inside the thickness band of the test circle."""

    def __init__(self, modulus: float, radius: float):
        self.modulus = modulus
        self.radius = radius
        super().__init__(f"root modulus {modulus:.12g} is on circle of radius {radius:.12g}")


class DivergentOrderError(AmoebaError):
    """The order integral could not be pinned to one integer vector."""

    REASONS = ("disagreement", "near_circle", "degenerate", "out_of_polytope")

    def __init__(self, reason: str, point: Optional[Tuple[float, ...]] = None):
        self.reason = reason
        self.point = point
        super().__init__(f"order diverges at {point}: {reason}")


class BudgetExceeded(AmoebaError):
    """Adaptive subdivision produced more cells than allowed."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"cell count {count} exceeds budget {cap}")


class NotMaximallySparseError(AmoebaError):
    """The support has monomials that are not Newton polytope vertices."""
