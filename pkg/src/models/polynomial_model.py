"""
Sparse Laurent polynomial representation.

A polynomial is an immutable, canonically ordered tuple of
``(exponent vector, complex coefficient)`` terms in 1–3 variables.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from utils.exceptions import ArityError, EmptyPolynomialError


Exponent = Tuple[int, ...]
ComplexPoint = Tuple[complex, ...]
LogPoint = Tuple[float, ...]

MAX_ARITY = 3
VARIABLE_NAMES = ("z1", "z2", "z3")


def graded_lex_key(exponent: Exponent) -> Tuple:
    """Sort key: total degree first, then z1-heavy terms before z2-heavy ones."""
    return (sum(exponent), tuple(-a for a in exponent))


def _format_real(value: float) -> str:
    """Shortest text that parses back to exactly ``value``."""
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return repr(float(value))


@dataclass(frozen=True)
class LaurentPolynomial:
    """
    Laurent polynomial p(z) = Σ c_α z^α with α ∈ ℤⁿ, n ≤ 3.

    Build instances with :meth:`from_terms`, which combines like terms,
    removes exact zeros and orders terms canonically.
    """
    arity: int
    terms: Tuple[Tuple[Exponent, complex], ...]
    _exponents: np.ndarray = field(init=False, repr=False, compare=False)
    _coefficients: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 1 <= self.arity <= MAX_ARITY:
            raise ArityError(f"arity must be between 1 and {MAX_ARITY}, got {self.arity}")
        if not self.terms:
            raise EmptyPolynomialError("polynomial has no terms")
        exponents = np.array([alpha for alpha, _ in self.terms], dtype=np.int64)
        exponents = exponents.reshape(len(self.terms), self.arity)
        coefficients = np.array([c for _, c in self.terms], dtype=np.complex128)
        object.__setattr__(self, "_exponents", exponents)
        object.__setattr__(self, "_coefficients", coefficients)

    @classmethod
    def from_terms(
        cls,
        terms: Union[Mapping[Exponent, complex], Iterable[Tuple[Exponent, complex]]],
        arity: Optional[int] = None,
    ) -> "LaurentPolynomial":
        """
        Create a canonical polynomial from raw terms.

        Args:
            terms: Mapping or iterable of (exponent, coefficient); repeats are summed
            arity: Number of variables (inferred from exponent length when omitted)

        Returns:
            Canonical LaurentPolynomial
        """
        items = terms.items() if isinstance(terms, Mapping) else terms
        combined: Dict[Exponent, complex] = {}
        for alpha, coefficient in items:
            alpha = tuple(int(a) for a in alpha)
            if arity is None:
                arity = len(alpha)
            if len(alpha) != arity:
                raise ArityError(f"exponent {alpha} does not have {arity} entries")
            combined[alpha] = combined.get(alpha, 0j) + complex(coefficient)

        kept = [(alpha, c) for alpha, c in combined.items() if c != 0]
        if not kept:
            raise EmptyPolynomialError("polynomial is zero after combining terms")
        kept.sort(key=lambda term: graded_lex_key(term[0]))
        return cls(arity=arity, terms=tuple(kept))

    @classmethod
    def monomial(cls, exponent: Exponent, coefficient: complex = 1.0) -> "LaurentPolynomial":
        """Single-term polynomial c·z^α."""
        return cls.from_terms({tuple(exponent): coefficient})

    # ------------------------------------------------------------------
    # Accessors

    @property
    def exponents(self) -> np.ndarray:
        """Integer matrix of shape (terms, arity)."""
        return self._exponents

    @property
    def coefficients(self) -> np.ndarray:
        """Complex coefficient vector aligned with :attr:`exponents`."""
        return self._coefficients

    @property
    def support(self) -> Tuple[Exponent, ...]:
        """Exponent vectors in canonical order."""
        return tuple(alpha for alpha, _ in self.terms)

    @property
    def is_real(self) -> bool:
        """True when every coefficient has zero imaginary part."""
        return bool(np.all(self._coefficients.imag == 0))

    @property
    def coefficient_scale(self) -> float:
        """Largest coefficient modulus."""
        return float(np.max(np.abs(self._coefficients)))

    @property
    def total_degree(self) -> int:
        """Largest total degree over the support."""
        return int(np.max(self._exponents.sum(axis=1)))

    def min_exponent(self, j: int) -> int:
        """Minimal exponent of variable ``j`` (0-based)."""
        return int(self._exponents[:, j].min())

    def max_exponent(self, j: int) -> int:
        """Maximal exponent of variable ``j`` (0-based)."""
        return int(self._exponents[:, j].max())

    def coefficient(self, exponent: Sequence[int]) -> complex:
        """Coefficient of z^α, zero when α is not in the support."""
        exponent = tuple(exponent)
        for alpha, c in self.terms:
            if alpha == exponent:
                return c
        return 0j

    def __len__(self) -> int:
        return len(self.terms)

    # ------------------------------------------------------------------
    # Derived polynomials

    def multiply_monomial(self, shift: Sequence[int], factor: complex = 1.0) -> "LaurentPolynomial":
        """Return factor·z^shift·p."""
        shift = tuple(int(s) for s in shift)
        return LaurentPolynomial.from_terms(
            [(tuple(a + s for a, s in zip(alpha, shift)), c * factor) for alpha, c in self.terms],
            arity=self.arity,
        )

    def scale_coefficient(self, exponent: Sequence[int], factor: complex) -> "LaurentPolynomial":
        """Return p with c_α multiplied by ``factor``."""
        exponent = tuple(exponent)
        return LaurentPolynomial.from_terms(
            [(alpha, c * factor if alpha == exponent else c) for alpha, c in self.terms],
            arity=self.arity,
        )

    def restrict_support(self, keep: Iterable[Exponent]) -> "LaurentPolynomial":
        """Return the polynomial made of the terms whose exponent is in ``keep``."""
        keep = {tuple(alpha) for alpha in keep}
        return LaurentPolynomial.from_terms(
            [(alpha, c) for alpha, c in self.terms if alpha in keep],
            arity=self.arity,
        )

    # ------------------------------------------------------------------
    # Text and storage

    def __str__(self) -> str:
        """Canonical text that :func:`parsers.parse_polynomial` reads back exactly."""
        pieces = []
        for index, (alpha, c) in enumerate(self.terms):
            monomial = "*".join(
                VARIABLE_NAMES[j] if a == 1 else f"{VARIABLE_NAMES[j]}^{a}"
                for j, a in enumerate(alpha) if a != 0
            )
            if c.imag == 0:
                sign = "-" if c.real < 0 else "+"
                magnitude = abs(c.real)
                coefficient = "" if (magnitude == 1 and monomial) else _format_real(magnitude)
            else:
                sign = "+"
                imag_sign = "-" if c.imag < 0 else "+"
                coefficient = f"({_format_real(c.real)}{imag_sign}{_format_real(abs(c.imag))}i)"
            body = "*".join(part for part in (coefficient, monomial) if part)
            if index == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        return {
            "text": str(self),
            "arity": self.arity,
            "terms": [
                {"exponent": list(alpha), "re": c.real, "im": c.imag}
                for alpha, c in self.terms
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LaurentPolynomial":
        """Create a polynomial from :meth:`to_dict` output."""
        return cls.from_terms(
            [(tuple(t["exponent"]), complex(t.get("re", 0.0), t.get("im", 0.0)))
             for t in data.get("terms", [])],
            arity=data.get("arity"),
        )
