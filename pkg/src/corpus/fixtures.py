"""
Named example polynomials.

Coefficients are exact; the texts go through the regular parser so the
fixtures also exercise the grammar.
"""

from typing import Dict, List

from models.polynomial_model import LaurentPolynomial
from parsers.polynomial_parser import parse_polynomial
from utils.exceptions import UnknownFixtureError

FIXTURES: Dict[str, str] = {
    # octagon with two interior monomials
    "p1": (
        "5z1 + 15z1^2 + 8z1^3z2 + 10z2^2 + 10z1^3z2^2 + 8z2^3"
        " + 15z1z2^4 + 5z1^2z2^4 + 50z1z2^3 + 50z1^2z2"
    ),
    # p1 without its interior monomials
    "p1_sparse": (
        "5z1 + 15z1^2 + 8z1^3z2 + 10z2^2 + 10z1^3z2^2 + 8z2^3"
        " + 15z1z2^4 + 5z1^2z2^4"
    ),
    # three bounded complement components
    "p2": "z1^2 + 50z2^3 + 100i*z1*z2^3 + 100z1^3z2^3 - 50z1^4z2^3 + z1^2z2^6",
    # same octagon as p1, one component per lattice point
    "p3": (
        "5z1 + 15z1^2 + 240z1z2 + 400z1^2z2 + 8z1^3z2 + 10z2^2 + 900z1z2^2"
        " + 900z1^2z2^2 + 10z1^3z2^2 + 8z2^3 + 400z1z2^3 + 240z1^2z2^3"
        " + 15z1z2^4 + 5z1^2z2^4"
    ),
    "line": "z1 + z2 + 1",
}


def fixture_names() -> List[str]:
    """Known fixture names, sorted."""
    return sorted(FIXTURES)


def fixture(name: str) -> LaurentPolynomial:
    """
    Polynomial for a fixture name.

    Raises:
        UnknownFixtureError: Name is not registered
    """
    key = name.strip().lower()
    if key not in FIXTURES:
        raise UnknownFixtureError(
            f"unknown fixture '{name}' (known: {', '.join(fixture_names())})"
        )
    return parse_polynomial(FIXTURES[key], arity=2)
