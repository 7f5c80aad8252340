"""
Tropical polynomials and their corner loci.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from models.polynomial_model import Exponent


@dataclass(frozen=True)
class TropicalPolynomial:
    """
    Max-plus polynomial x ↦ max_α (a_α + ⟨α, x⟩).

    Terms keep their insertion order; exponents must be distinct.
    ``inactive`` lists exponents known never to attain the maximum.
    """
    terms: Tuple[Tuple[Exponent, float], ...]
    inactive: Tuple[Exponent, ...] = ()

    def __post_init__(self):
        if not self.terms:
            raise ValueError("tropical polynomial needs at least one term")
        exponents = [alpha for alpha, _ in self.terms]
        if len(set(exponents)) != len(exponents):
            raise ValueError("tropical exponents must be distinct")
        if len({len(alpha) for alpha in exponents}) != 1:
            raise ValueError("tropical exponents must share one dimension")

    @property
    def arity(self) -> int:
        """Number of variables."""
        return len(self.terms[0][0])

    @property
    def exponents(self) -> np.ndarray:
        """Integer matrix of shape (terms, arity)."""
        return np.array([alpha for alpha, _ in self.terms], dtype=np.int64)

    @property
    def coefficients(self) -> np.ndarray:
        """Real vector of a_α."""
        return np.array([a for _, a in self.terms], dtype=float)

    def coefficient(self, exponent: Sequence[int]) -> Optional[float]:
        """a_α for the given exponent, None when absent."""
        exponent = tuple(exponent)
        for alpha, a in self.terms:
            if alpha == exponent:
                return a
        return None

    def values(self, points: np.ndarray) -> np.ndarray:
        """Every affine piece at every point, shape (points, terms)."""
        points = np.asarray(points, dtype=float).reshape(-1, self.arity)
        return points @ self.exponents.T.astype(float) + self.coefficients

    def __len__(self) -> int:
        return len(self.terms)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        return {
            "terms": [{"exponent": list(alpha), "a": a} for alpha, a in self.terms],
            "inactive": [list(alpha) for alpha in self.inactive],
        }


@dataclass(frozen=True)
class TropicalEdge:
    """
    One edge of a plane tropical curve.

    A segment runs from ``start`` to ``end``; a ray starts at ``start``
    and follows ``direction`` (``end`` is None).
    """
    start: Tuple[float, float]
    active: Tuple[Exponent, Exponent]
    end: Optional[Tuple[float, float]] = None
    direction: Optional[Tuple[float, float]] = None

    @property
    def is_ray(self) -> bool:
        """True for unbounded edges."""
        return self.end is None

    @property
    def tangent(self) -> np.ndarray:
        """Unnormalised edge direction."""
        if self.is_ray:
            return np.asarray(self.direction, dtype=float)
        return np.asarray(self.end, dtype=float) - np.asarray(self.start, dtype=float)

    def clipped(self, length: float) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        """Endpoints, with rays cut at the given length."""
        if not self.is_ray:
            return self.start, self.end
        d = self.tangent
        d = d / np.linalg.norm(d)
        tip = np.asarray(self.start) + length * d
        return self.start, (float(tip[0]), float(tip[1]))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        data: Dict[str, Any] = {
            "start": list(self.start),
            "active": [list(alpha) for alpha in self.active],
        }
        if self.is_ray:
            data["direction"] = list(self.direction)
        else:
            data["end"] = list(self.end)
        return data


@dataclass
class TropicalCurve:
    """Corner locus of a tropical polynomial in the plane."""
    vertices: List[Tuple[float, ...]] = field(default_factory=list)
    vertex_terms: List[Tuple[Exponent, ...]] = field(default_factory=list)
    edges: List[TropicalEdge] = field(default_factory=list)

    @property
    def segments(self) -> List[TropicalEdge]:
        """Bounded edges."""
        return [e for e in self.edges if not e.is_ray]

    @property
    def rays(self) -> List[TropicalEdge]:
        """Unbounded edges."""
        return [e for e in self.edges if e.is_ray]

    @property
    def is_empty(self) -> bool:
        """True when there is nothing to draw."""
        return not self.vertices and not self.edges

    def sample_points(self, per_edge: int = 16, ray_length: float = 4.0) -> np.ndarray:
        """Interior points spread along every edge, shape (m, 2)."""
        if not self.edges:
            return np.empty((0, 2))
        t = (np.arange(per_edge) + 0.5) / per_edge
        chunks = []
        for edge in self.edges:
            a, b = edge.clipped(ray_length)
            a, b = np.asarray(a), np.asarray(b)
            chunks.append(a + t[:, None] * (b - a))
        return np.concatenate(chunks)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        return {
            "vertices": [
                {"point": list(v), "active": [list(alpha) for alpha in terms]}
                for v, terms in zip(self.vertices, self.vertex_terms)
            ],
            "segments": [e.to_dict() for e in self.segments],
            "rays": [e.to_dict() for e in self.rays],
        }
