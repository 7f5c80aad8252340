"""
Tropical (max-plus) polynomials and their corner loci.
"""

from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from models.polynomial_model import Exponent, LaurentPolynomial
from models.tropical_model import TropicalCurve, TropicalEdge, TropicalPolynomial
from utils.exceptions import DimensionError
from utils.logger_config import get_logger

logger = get_logger("amoeba.tropical")

ARGMAX_TOLERANCE = 1e-9


def tropical_add(a: float, b: float) -> float:
    """a ⊕ b = max(a, b)."""
    return max(a, b)


def tropical_mul(a: float, b: float) -> float:
    """a ⊙ b = a + b."""
    return a + b


def archimedean_tropicalization(p: LaurentPolynomial) -> TropicalPolynomial:
    """Terms (α, ln|c_α|) of p."""
    return TropicalPolynomial(
        terms=tuple((alpha, float(np.log(abs(c)))) for alpha, c in p.terms)
    )


def _tolerance(value: float, rel_tol: float) -> float:
    return rel_tol * max(1.0, abs(value))


def tropical_eval(
    t: TropicalPolynomial,
    x: Sequence[float],
    rel_tol: float = ARGMAX_TOLERANCE,
) -> Tuple[float, List[Exponent]]:
    """
    Value and maximizing terms of a tropical polynomial.

    Returns:
        Tuple (max value, exponents within the relative tolerance of the max)
    """
    values = t.values(np.asarray(x, dtype=float)[None, :])[0]
    top = float(values.max())
    tol = _tolerance(top, rel_tol)
    active = [t.terms[i][0] for i in np.flatnonzero(values >= top - tol)]
    return top, active


def tropical_vertices(
    t: TropicalPolynomial,
    rel_tol: float = ARGMAX_TOLERANCE,
) -> List[Tuple[Tuple[float, ...], Tuple[Exponent, ...]]]:
    """
    Points where at least n+1 affinely independent terms tie for the max.

    Works in any dimension by solving every (n+1)-subset of terms.

    Returns:
        List of (point, active exponents), sorted by point
    """
    n = t.arity
    exponents = t.exponents.astype(float)
    coefficients = t.coefficients
    found: Dict[Tuple[float, ...], Tuple[Exponent, ...]] = {}
    for subset in combinations(range(len(t)), n + 1):
        base = subset[0]
        matrix = exponents[list(subset[1:])] - exponents[base]
        if abs(np.linalg.det(matrix)) < 0.5:
            continue
        rhs = coefficients[base] - coefficients[list(subset[1:])]
        point = np.linalg.solve(matrix, rhs)
        value, active = tropical_eval(t, point, rel_tol)
        if not all(t.terms[i][0] in active for i in subset):
            continue
        key = tuple(round(float(v), 9) for v in point)
        found.setdefault(key, tuple(sorted(active)))
    return sorted(found.items())


def _edge_interval(
    t: TropicalPolynomial,
    i: int,
    j: int,
    rel_tol: float,
) -> Optional[Tuple[np.ndarray, np.ndarray, float, float]]:
    """
    Part of the bisector of terms i and j where they dominate all others.

    Returns:
        (base point, direction, s_lo, s_hi) or None when empty or degenerate
    """
    exponents = t.exponents.astype(float)
    coefficients = t.coefficients
    delta = exponents[i] - exponents[j]
    norm2 = float(delta @ delta)
    base = (coefficients[j] - coefficients[i]) * delta / norm2
    direction = np.array([-delta[1], delta[0]])

    scale = 1.0 + np.abs(coefficients).max() + np.abs(base).sum()
    tol = rel_tol * scale
    lo, hi = -np.inf, np.inf
    for k in range(len(t)):
        if k in (i, j):
            continue
        gap = exponents[i] - exponents[k]
        c = coefficients[i] - coefficients[k] + gap @ base
        e = gap @ direction
        if abs(e) <= 1e-12:
            if c < -tol:
                return None
            if abs(c) <= tol:
                # k ties along the whole line: keep only the outermost pair
                along = (exponents[k] - exponents[j]) @ delta
                if not 0.0 < along < norm2:
                    return None
            continue
        bound = -c / e
        if e > 0:
            lo = max(lo, bound)
        else:
            hi = min(hi, bound)
    if hi - lo <= tol:
        return None
    return base, direction, lo, hi


def _as_point(v: np.ndarray) -> Tuple[float, float]:
    return float(v[0]), float(v[1])


def tropical_hypersurface(
    t: TropicalPolynomial,
    rel_tol: float = ARGMAX_TOLERANCE,
) -> TropicalCurve:
    """
    Corner locus of a plane tropical polynomial.

    Each pair of terms contributes the part of its bisector line where
    the pair dominates every other term; that part is a segment, a ray
    or a whole line (stored as two opposite rays).
    """
    if t.arity != 2:
        raise DimensionError("tropical curves are extracted for two variables only")

    curve = TropicalCurve()
    for point, active in tropical_vertices(t, rel_tol):
        curve.vertices.append(point)
        curve.vertex_terms.append(active)

    for i, j in combinations(range(len(t)), 2):
        piece = _edge_interval(t, i, j, rel_tol)
        if piece is None:
            continue
        base, direction, lo, hi = piece
        active = (t.terms[i][0], t.terms[j][0])
        if np.isfinite(lo) and np.isfinite(hi):
            curve.edges.append(TropicalEdge(
                start=_as_point(base + lo * direction),
                end=_as_point(base + hi * direction),
                active=active,
            ))
        elif np.isfinite(lo):
            curve.edges.append(TropicalEdge(
                start=_as_point(base + lo * direction),
                direction=_as_point(direction),
                active=active,
            ))
        elif np.isfinite(hi):
            curve.edges.append(TropicalEdge(
                start=_as_point(base + hi * direction),
                direction=_as_point(-direction),
                active=active,
            ))
        else:
            curve.edges.append(TropicalEdge(start=_as_point(base), direction=_as_point(direction), active=active))
            curve.edges.append(TropicalEdge(start=_as_point(base), direction=_as_point(-direction), active=active))

    logger.debug(
        f"Tropical curve: {len(curve.vertices)} vertices, "
        f"{len(curve.segments)} segments, {len(curve.rays)} rays"
    )
    return curve


def inactive_terms(
    t: TropicalPolynomial,
    lows: Sequence[float],
    highs: Sequence[float],
    steps: int = 64,
    rel_tol: float = ARGMAX_TOLERANCE,
) -> Tuple[Exponent, ...]:
    """Terms that never attain the max on a sample grid over a box."""
    axes = [np.linspace(lo, hi, steps) for lo, hi in zip(lows, highs)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, t.arity)
    values = t.values(grid)
    top = values.max(axis=1, keepdims=True)
    attained = np.any(values >= top - rel_tol * np.maximum(1.0, np.abs(top)), axis=0)
    return tuple(t.terms[k][0] for k in np.flatnonzero(~attained))
