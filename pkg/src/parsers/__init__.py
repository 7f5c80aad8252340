"""
Polynomial text parsing for the amoeba toolkit.
"""

from parsers.polynomial_parser import PolynomialParser, parse_polynomial, format_polynomial

__all__ = ["PolynomialParser", "parse_polynomial", "format_polynomial"]
