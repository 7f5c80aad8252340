"""Tests for polynomial text parsing and canonical printing."""

import pytest

from models import LaurentPolynomial
from parsers import PolynomialParser, format_polynomial, parse_polynomial
from utils.exceptions import ArityError, EmptyPolynomialError, PolynomialSyntaxError


def test_parse_line():
    """Three unit terms in two variables."""
    p = parse_polynomial("z1 + z2 + 1")
    assert p.arity == 2
    assert len(p) == 3
    assert p.coefficient((1, 0)) == 1
    assert p.coefficient((0, 1)) == 1
    assert p.coefficient((0, 0)) == 1


def test_parse_complex_coefficients():
    """Imaginary literals, parenthesised sums and implicit products."""
    p = parse_polynomial("z1^2 - 3i*z1*z2 + (1-2i) z2^3")
    assert p.coefficient((2, 0)) == 1
    assert p.coefficient((1, 1)) == -3j
    assert p.coefficient((0, 3)) == 1 - 2j


def test_parse_laurent_exponents():
    """Negative exponents with and without parentheses."""
    p = parse_polynomial("z1^-1 + z2^(-2) + 4")
    assert set(p.support) == {(-1, 0), (0, -2), (0, 0)}


def test_like_terms_are_combined():
    """Repeated monomials add up; cancelled terms disappear."""
    p = parse_polynomial("2z1 + 3z1 + z2 - z2 + 1")
    assert p.coefficient((1, 0)) == 5
    assert (0, 1) not in p.support


def test_aliases_and_unicode_operators():
    """x, y and z stand for z1, z2 and z3; a unicode minus is accepted."""
    p = parse_polynomial("x·y − 2")
    assert p.coefficient((1, 1)) == 1
    assert p.coefficient((0, 0)) == -2


def test_requested_arity_pads_exponents():
    """Univariate text read as a plane polynomial."""
    p = parse_polynomial("z1^2 - 1", arity=2)
    assert p.arity == 2
    assert set(p.support) == {(2, 0), (0, 0)}


def test_syntax_error_carries_position():
    """Malformed text reports where parsing stopped."""
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial("z1 + + z2")
    assert info.value.position >= 0


def test_empty_text_is_a_syntax_error():
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("   ")


def test_too_many_variables():
    with pytest.raises(ArityError):
        parse_polynomial("z1 + z4")


def test_variable_above_requested_arity():
    with pytest.raises(ArityError):
        parse_polynomial("z1 + z3", arity=2)


def test_everything_cancels():
    with pytest.raises(EmptyPolynomialError):
        parse_polynomial("z1 - z1")


def test_canonical_text_reads_back():
    """Printing then parsing gives the same polynomial."""
    for text in (
        "z1^2 + 50z2^3 + 100i*z1*z2^3 + 100z1^3z2^3 - 50z1^4z2^3 + z1^2z2^6",
        "0.5z1^-1 - 2.25z2 + (1.5-0.25i)",
        "z1*z2*z3 - 7",
    ):
        p = parse_polynomial(text)
        again = parse_polynomial(format_polynomial(p), arity=p.arity)
        assert again == p


def test_terms_are_graded_lex_ordered():
    """Lower total degree first, z1-heavy before z2-heavy within a degree."""
    p = parse_polynomial("z2^2 + z1*z2 + z1^2 + 1")
    assert p.support == ((0, 0), (2, 0), (1, 1), (0, 2))


def test_parser_instance_is_reusable():
    parser = PolynomialParser()
    assert parser.parse("z1 + 1") == parser.parse("1 + z1")


def test_dict_round_trip_keeps_coefficients():
    p = parse_polynomial("3z1 - 2i*z2 + 1")
    assert LaurentPolynomial.from_dict(p.to_dict()) == p
