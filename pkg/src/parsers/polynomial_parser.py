"""
Polynomial text grammar.

Reads expressions such as ``"5z1 + 15z1^2 - (1+2i)*z1^-1*z2"`` into
:class:`LaurentPolynomial` and prints them back.

Grammar::

    polynomial :: [sign] term (sign term)*
    term       :: factor ([*] factor)*
    factor     :: '(' complex ')' | atom | variable [('^' | '**') exponent]
    complex    :: [sign] atom (sign atom)*
    atom       :: number ['i'] | 'i'
    variable   :: z1 | z2 | z3 | x | y | z
    exponent   :: integer with optional sign, optionally in parentheses
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from pyparsing import (
    Literal,
    Optional as Opt,
    ParseBaseException,
    ParserElement,
    Regex,
    Suppress,
    ZeroOrMore,
)

from models.polynomial_model import LaurentPolynomial, MAX_ARITY
from utils.exceptions import ArityError, PolynomialSyntaxError
from utils.logger_config import get_logger

ParserElement.enable_packrat()

logger = get_logger("amoeba.parser")


@dataclass
class _Power:
    name: str
    exponent: int


@dataclass
class _Coefficient:
    value: complex


@dataclass
class _Term:
    coefficient: complex = 1.0 + 0j
    powers: List[_Power] = field(default_factory=list)


def _signed_sum(tokens) -> complex:
    total = 0j
    sign = 1.0
    for token in tokens:
        if isinstance(token, str):
            sign = -1.0 if token == "-" else 1.0
        else:
            total += sign * token
            sign = 1.0
    return total


def _build_term(tokens) -> _Term:
    term = _Term()
    for token in tokens:
        if isinstance(token, _Power):
            term.powers.append(token)
        else:
            term.coefficient *= token.value
    return term


class PolynomialParser:
    """
    Parser for sparse Laurent polynomials in up to three variables.

    Variable aliases ``x``, ``y`` and ``z`` stand for ``z1``, ``z2`` and
    ``z3``. The arity is the highest variable index used unless given
    explicitly.
    """

    # One-to-one character substitutions, positions are preserved
    SUBSTITUTIONS = {
        "−": "-",   # minus sign
        "·": "*",   # middle dot
        "×": "*",   # multiplication sign
    }

    ALIASES = {"x": 1, "y": 2, "z": 3}

    def __init__(self):
        """Build the grammar."""
        sign = Regex(r"[+-]")
        number = Regex(r"(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")

        imaginary = (number + Suppress(Literal("i"))).set_parse_action(
            lambda t: complex(0.0, float(t[0]))
        )
        real = number.copy().set_parse_action(lambda t: complex(float(t[0]), 0.0))
        unit = Literal("i").set_parse_action(lambda t: 1j)
        atom = imaginary | real | unit

        paren = (
            Suppress("(") + Opt(sign) + atom + ZeroOrMore(sign + atom) + Suppress(")")
        ).set_parse_action(lambda t: _Coefficient(_signed_sum(t)))
        scalar = atom.copy().add_parse_action(lambda t: _Coefficient(t[0]))

        variable = Regex(r"z\d+|[xyz](?![0-9])")
        integer = Regex(r"[+-]?\d+")
        exponent = integer | (Suppress("(") + integer + Suppress(")"))
        power_op = Literal("**") | Literal("^")
        power = (variable + Opt(Suppress(power_op) + exponent)).set_parse_action(
            lambda t: _Power(t[0], int(t[1]) if len(t) > 1 else 1)
        )

        factor = power | paren | scalar
        term = (factor + ZeroOrMore(Opt(Suppress("*")) + factor)).set_parse_action(_build_term)

        self.grammar = Opt(sign) + term + ZeroOrMore(sign + term)

    def normalize(self, text: str) -> str:
        """Apply the character substitutions."""
        for source, target in self.SUBSTITUTIONS.items():
            text = text.replace(source, target)
        return text

    def parse(self, text: str, arity: Optional[int] = None) -> LaurentPolynomial:
        """
        Parse polynomial text.

        Args:
            text: Expression string
            arity: Number of variables (default: highest index used, at least 1)

        Returns:
            Canonical LaurentPolynomial

        Raises:
            PolynomialSyntaxError: Text does not follow the grammar
            ArityError: A variable index above three, or above ``arity``
            EmptyPolynomialError: All terms cancelled
        """
        source = self.normalize(text)
        if not source.strip():
            raise PolynomialSyntaxError("empty input", 0, text)
        try:
            tokens = self.grammar.parse_string(source, parse_all=True)
        except ParseBaseException as exc:
            raise PolynomialSyntaxError(f"unexpected input: {exc.msg}", exc.loc, text) from exc

        raw_terms = []
        used = 0
        sign = 1.0
        for token in tokens:
            if isinstance(token, str):
                sign = -1.0 if token == "-" else 1.0
                continue
            powers: Dict[int, int] = {}
            for power in token.powers:
                index = self._variable_index(power.name)
                powers[index] = powers.get(index, 0) + power.exponent
                used = max(used, index)
            raw_terms.append((powers, sign * token.coefficient))
            sign = 1.0

        if arity is None:
            arity = max(used, 1)
        elif used > arity:
            raise ArityError(f"variable z{used} exceeds requested arity {arity}")
        if not 1 <= arity <= MAX_ARITY:
            raise ArityError(f"arity must be between 1 and {MAX_ARITY}, got {arity}")

        terms = []
        for powers, coefficient in raw_terms:
            alpha = [0] * arity
            for index, exp in powers.items():
                alpha[index - 1] = exp
            terms.append((tuple(alpha), coefficient))

        polynomial = LaurentPolynomial.from_terms(terms, arity=arity)
        logger.debug(f"Parsed '{text}' into {len(polynomial)} terms")
        return polynomial

    def _variable_index(self, name: str) -> int:
        """Index 1..3 of a variable token."""
        if name in self.ALIASES:
            return self.ALIASES[name]
        index = int(name[1:])
        if index < 1:
            raise ArityError(f"variable indices start at 1, got {name}")
        if index > MAX_ARITY:
            raise ArityError(f"at most {MAX_ARITY} variables are supported, found {name}")
        return index


_parser: Optional[PolynomialParser] = None


def parse_polynomial(text: str, arity: Optional[int] = None) -> LaurentPolynomial:
    """Parse polynomial text with a shared parser instance."""
    global _parser
    if _parser is None:
        _parser = PolynomialParser()
    return _parser.parse(text, arity=arity)


def format_polynomial(polynomial: LaurentPolynomial) -> str:
    """Canonical text that :func:`parse_polynomial` reads back exactly."""
    return str(polynomial)
