"""
Random polynomial families and maximally sparse reduction.
"""

from itertools import product
from typing import List

import numpy as np

from algebra.newton import newton_polytope, polytope_of_points
from models.corpus_model import FamilySpec, PhaseLaw, SupportRule
from models.polynomial_model import Exponent, LaurentPolynomial


def simplex_points(arity: int, degree: int) -> List[Exponent]:
    """Lattice points α ≥ 0 with |α| ≤ degree, graded order."""
    points = [alpha for alpha in product(range(degree + 1), repeat=arity) if sum(alpha) <= degree]
    return sorted(points, key=lambda alpha: (sum(alpha), alpha))


def simplex_vertices(arity: int, degree: int) -> List[Exponent]:
    """0 and degree·e_j for every axis."""
    vertices = [tuple([0] * arity)]
    for j in range(arity):
        alpha = [0] * arity
        alpha[j] = degree
        vertices.append(tuple(alpha))
    return vertices


def _support(spec: FamilySpec, rng: np.random.Generator) -> List[Exponent]:
    if spec.support_rule is SupportRule.FULL_SIMPLEX:
        return simplex_points(spec.arity, spec.degree)
    if spec.support_rule is SupportRule.VERTICES_ONLY:
        return simplex_vertices(spec.arity, spec.degree)
    if spec.support_rule is SupportRule.EXPLICIT:
        return list(spec.support)

    pool = simplex_points(spec.arity, spec.degree)
    count = min(max(spec.hull_points, spec.arity + 1), len(pool))
    picked = rng.choice(len(pool), size=count, replace=False)
    hull = polytope_of_points([pool[i] for i in np.sort(picked)])
    return sorted(hull.vertices)


def random_polynomial(spec: FamilySpec, index: int) -> LaurentPolynomial:
    """
    Member ``index`` of a random family.

    The generator is seeded with (spec.seed, index), so every member can
    be rebuilt on its own and in any worker. Magnitudes are log-uniform
    on ``spec.magnitude_range``; phases are ±1 (real) or uniform on the circle.
    """
    rng = np.random.default_rng([spec.seed, index])
    support = _support(spec, rng)

    lo, hi = spec.magnitude_range
    magnitudes = np.exp(rng.uniform(np.log(lo), np.log(hi), size=len(support)))
    if spec.phase is PhaseLaw.REAL:
        phases = rng.choice([1.0, -1.0], size=len(support))
    else:
        phases = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, size=len(support)))
    coefficients = magnitudes * phases
    return LaurentPolynomial.from_terms(list(zip(support, coefficients)), arity=spec.arity)


def sparsify(p: LaurentPolynomial) -> LaurentPolynomial:
    """Keep only the monomials at vertices of the Newton polytope."""
    return p.restrict_support(newton_polytope(p).vertices)
