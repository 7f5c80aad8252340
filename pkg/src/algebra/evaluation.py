"""
Evaluation and slicing of Laurent polynomials.

Besides pointwise evaluation this module builds the univariate slices
that every membership and rendering routine feeds to the root finder.
"""

from typing import Optional, Sequence, Tuple

import numpy as np

from models.numeric_model import UnivariateSlice
from models.polynomial_model import ComplexPoint, LaurentPolynomial, LogPoint
from utils.exceptions import ArityError, ZeroCoordinateError

TWO_PI = 2.0 * np.pi

# Coefficients below this fraction of the largest one count as zero
ZERO_THRESHOLD = 1e-300


def pairing(points: np.ndarray, exponents: np.ndarray) -> np.ndarray:
    """
    ⟨α, x⟩ for every point and exponent, shape (points, terms).

    Summed coordinate by coordinate so each entry is computed the same
    way whatever the batch size.
    """
    points = np.asarray(points, dtype=float)
    exponents = np.asarray(exponents, dtype=float)
    total = np.zeros((points.shape[0], exponents.shape[0]))
    for axis in range(points.shape[1]):
        total += points[:, axis:axis + 1] * exponents[None, :, axis]
    return total


def _check_points(p: LaurentPolynomial, points: np.ndarray) -> None:
    if points.shape[1] != p.arity:
        raise ArityError(f"points have {points.shape[1]} coordinates, polynomial has {p.arity}")
    negative = (p.exponents < 0).any(axis=0)
    zero = (points == 0)
    if np.any(zero & negative[None, :]):
        raise ZeroCoordinateError("zero coordinate met a negative exponent")


def evaluate_many(p: LaurentPolynomial, points: np.ndarray) -> np.ndarray:
    """
    Evaluate p at many points.

    Args:
        p: Polynomial
        points: Complex array of shape (m, n)

    Returns:
        Complex array of shape (m,)
    """
    points = np.asarray(points, dtype=np.complex128).reshape(-1, p.arity)
    _check_points(p, points)
    with np.errstate(divide="ignore", invalid="ignore"):
        monomials = np.prod(points[:, None, :] ** p.exponents[None, :, :], axis=2)
    return monomials @ p.coefficients


def evaluate(p: LaurentPolynomial, z: ComplexPoint) -> complex:
    """Evaluate p(z) = Σ c_α z^α at one point."""
    return complex(evaluate_many(p, np.asarray([z], dtype=np.complex128))[0])


def term_magnitudes(p: LaurentPolynomial, points: np.ndarray) -> np.ndarray:
    """|c_α z^α| for every point and term, shape (m, terms)."""
    points = np.asarray(points, dtype=np.complex128).reshape(-1, p.arity)
    _check_points(p, points)
    with np.errstate(divide="ignore", invalid="ignore"):
        monomials = np.prod(np.abs(points)[:, None, :] ** p.exponents[None, :, :], axis=2)
    return monomials * np.abs(p.coefficients)[None, :]


def partial_logarithmic_derivative(p: LaurentPolynomial, j: int) -> LaurentPolynomial:
    """
    z_j·∂p/∂z_j as a polynomial.

    Args:
        p: Polynomial
        j: Variable index, 1-based

    Raises:
        EmptyPolynomialError: p does not depend on z_j
    """
    if not 1 <= j <= p.arity:
        raise ArityError(f"variable index {j} outside 1..{p.arity}")
    return LaurentPolynomial.from_terms(
        [(alpha, alpha[j - 1] * c) for alpha, c in p.terms],
        arity=p.arity,
    )


def restrict_to_variable(
    p: LaurentPolynomial,
    j: int,
    fixed: Sequence[complex],
) -> UnivariateSlice:
    """
    Substitute values for every variable except z_j.

    Args:
        p: Polynomial
        j: Free variable, 1-based
        fixed: Values of the other variables in index order (n-1 entries)

    Returns:
        UnivariateSlice with the dense coefficients of q(w) = p|_{z_j = w}
    """
    if not 1 <= j <= p.arity:
        raise ArityError(f"variable index {j} outside 1..{p.arity}")
    fixed = np.asarray(fixed, dtype=np.complex128).reshape(-1)
    if len(fixed) != p.arity - 1:
        raise ArityError(f"expected {p.arity - 1} fixed values, got {len(fixed)}")
    if np.any(fixed == 0):
        raise ZeroCoordinateError("fixed coordinates must be nonzero")

    axis = j - 1
    others = [i for i in range(p.arity) if i != axis]
    powers = p.exponents[:, axis]
    m = int(powers.min())
    coefficients = np.zeros(int(powers.max()) - m + 1, dtype=np.complex128)
    if others:
        factors = np.prod(fixed[None, :] ** p.exponents[:, others], axis=1)
    else:
        factors = np.ones(len(p), dtype=np.complex128)
    np.add.at(coefficients, powers - m, p.coefficients * factors)

    scale = np.max(np.abs(p.coefficients * factors))
    degenerate = bool(np.all(np.abs(coefficients) <= ZERO_THRESHOLD * max(scale, 1e-300)))
    return UnivariateSlice(coefficients=coefficients, min_exponent=m, degenerate=degenerate)


def log_point(z: ComplexPoint) -> LogPoint:
    """Componentwise ln|z_i|."""
    z = np.asarray(z, dtype=np.complex128).reshape(-1)
    if np.any(z == 0):
        raise ZeroCoordinateError("Log is undefined at a zero coordinate")
    return tuple(float(v) for v in np.log(np.abs(z)))


def wrap_angle(theta: np.ndarray) -> np.ndarray:
    """Reduce angles to [0, 2π)."""
    wrapped = np.mod(theta, TWO_PI)
    return np.where(wrapped >= TWO_PI, 0.0, wrapped)


def arg_point(z: ComplexPoint) -> Tuple[float, ...]:
    """Componentwise argument in [0, 2π)."""
    z = np.asarray(z, dtype=np.complex128).reshape(-1)
    if np.any(z == 0):
        raise ZeroCoordinateError("Arg is undefined at a zero coordinate")
    return tuple(float(v) for v in wrap_angle(np.angle(z)))


def torus_point(x: Sequence[float], theta: Sequence[float]) -> np.ndarray:
    """The point with Log = x and Arg = θ."""
    return np.exp(np.asarray(x, dtype=float) + 1j * np.asarray(theta, dtype=float))


class SliceBuilder:
    """
    Batched unit-disk slices of one polynomial along one axis.

    For fiber point (x, θ) the free variable is written
    z_j = e^{x_j}·u, so roots with |u| < 1 are exactly the roots with
    |z_j| < e^{x_j}. Coefficient rows are built in the log domain and
    scaled so that the largest term magnitude is one.
    """

    def __init__(self, p: LaurentPolynomial, axis: int):
        """
        Args:
            p: Polynomial
            axis: Free variable, 0-based
        """
        if not 0 <= axis < p.arity:
            raise ArityError(f"axis {axis} outside 0..{p.arity - 1}")
        self.polynomial = p
        self.axis = axis
        self.others = [i for i in range(p.arity) if i != axis]

        powers = p.exponents[:, axis]
        self.min_exponent = int(powers.min())
        self.degree = int(powers.max()) - self.min_exponent

        self._slot_of_term = [int(k) for k in powers - self.min_exponent]

        self._log_coefficients = np.log(np.abs(p.coefficients))
        self._phases = np.angle(p.coefficients)
        self._exponents = p.exponents.astype(float)
        self._other_exponents = p.exponents[:, self.others].astype(float)

    def build(
        self,
        x: np.ndarray,
        theta: Optional[np.ndarray] = None,
    ) -> Tuple[np.ndarray, np.ndarray]:
        """
        Slice coefficients at many fiber points.

        Args:
            x: Log points, shape (N, n)
            theta: Arguments of the other variables, shape (N, n-1)

        Returns:
            Tuple (coefficients of shape (N, d+1), degenerate mask of shape (N,))
        """
        x = np.asarray(x, dtype=float).reshape(-1, self.polynomial.arity)
        log_terms = self._log_coefficients[None, :] + pairing(x, self._exponents)
        log_terms = log_terms - log_terms.max(axis=1, keepdims=True)
        phases = np.broadcast_to(self._phases, log_terms.shape)
        if self.others:
            theta = np.asarray(theta, dtype=float).reshape(-1, len(self.others))
            phases = phases + pairing(theta, self._other_exponents)
        terms = np.exp(log_terms + 1j * phases)
        rows = np.zeros((len(x), self.degree + 1), dtype=np.complex128)
        for t, slot in enumerate(self._slot_of_term):
            rows[:, slot] += terms[:, t]
        magnitudes = np.abs(rows)
        degenerate = magnitudes.max(axis=1) <= ZERO_THRESHOLD
        return rows, degenerate

    def circle_tolerance(self, x: np.ndarray, base: float) -> np.ndarray:
        """Relative half-width of the circle band for each point."""
        x = np.asarray(x, dtype=float).reshape(-1, self.polynomial.arity)
        return base * (1.0 + np.abs(x[:, self.axis]))
