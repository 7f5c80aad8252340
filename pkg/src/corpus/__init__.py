"""
Fixture polynomials, random families and the solidity scan.
"""

from corpus.fixtures import FIXTURES, fixture, fixture_names
from corpus.generators import random_polynomial, simplex_points, simplex_vertices, sparsify
from corpus.passare_scan import check_solidity, passare_scan

__all__ = [
    "FIXTURES",
    "fixture",
    "fixture_names",
    "random_polynomial",
    "simplex_points",
    "simplex_vertices",
    "sparsify",
    "check_solidity",
    "passare_scan",
]
