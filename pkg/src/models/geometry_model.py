"""
Newton polytope data structures.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Tuple

from models.polynomial_model import Exponent


class PointKind(Enum):
    """Position of a lattice point relative to a polytope."""
    VERTEX = "vertex"
    BOUNDARY = "boundary"
    INTERIOR = "interior"
    OUTSIDE = "outside"


# normal·x ≤ offset (inequality) or normal·x == offset (equality)
HalfSpace = Tuple[Tuple[int, ...], int]


@dataclass(frozen=True)
class NewtonPolytope:
    """
    Integer polytope conv(A) with its lattice points.

    ``inequalities`` describe the relative boundary (facets) and
    ``equalities`` the affine hull when the polytope is not full
    dimensional. For n=2 full-dimensional polygons the vertex list is
    counterclockwise and strictly convex.
    """
    dimension: int
    affine_dimension: int
    vertices: Tuple[Exponent, ...]
    lattice_points: Tuple[Exponent, ...]
    kinds: Tuple[PointKind, ...]
    inequalities: Tuple[HalfSpace, ...]
    equalities: Tuple[HalfSpace, ...]

    @property
    def vertex_count(self) -> int:
        """Number of vertices."""
        return len(self.vertices)

    @property
    def lattice_count(self) -> int:
        """Number of lattice points."""
        return len(self.lattice_points)

    def points_of_kind(self, kind: PointKind) -> List[Exponent]:
        """Lattice points with the given classification."""
        return [pt for pt, k in zip(self.lattice_points, self.kinds) if k is kind]

    @property
    def interior_points(self) -> List[Exponent]:
        """Relative-interior lattice points."""
        return self.points_of_kind(PointKind.INTERIOR)

    def contains(self, point: Tuple[float, ...], tol: float = 0.0) -> bool:
        """Half-space membership test (also accepts real points)."""
        for normal, offset in self.equalities:
            if abs(sum(a * x for a, x in zip(normal, point)) - offset) > tol:
                return False
        for normal, offset in self.inequalities:
            if sum(a * x for a, x in zip(normal, point)) > offset + tol:
                return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON output."""
        return {
            "dimension": self.dimension,
            "affine_dimension": self.affine_dimension,
            "vertices": [list(v) for v in self.vertices],
            "lattice_count": self.lattice_count,
            "interior_points": [list(p) for p in self.interior_points],
            "boundary_points": [list(p) for p in self.points_of_kind(PointKind.BOUNDARY)],
        }
