"""
Newton polytopes with exact integer geometry.

Hulls, facet descriptions and lattice-point classification are computed
with 64-bit integer cross products only. Lower-dimensional hulls
(a point, a segment, a planar polygon in 3D) are supported.
"""

from functools import reduce
from itertools import combinations
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from models.geometry_model import HalfSpace, NewtonPolytope, PointKind
from models.polynomial_model import Exponent, LaurentPolynomial
from utils.exceptions import DimensionError
from utils.logger_config import get_logger

logger = get_logger("amoeba.newton")


def _cross2(o: Sequence[int], a: Sequence[int], b: Sequence[int]) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _primitive(vector: Iterable[int]) -> Tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    vector = tuple(int(v) for v in vector)
    divisor = reduce(gcd, (abs(v) for v in vector), 0)
    if divisor == 0:
        return vector
    return tuple(v // divisor for v in vector)


def _cross3(a: Sequence[int], b: Sequence[int]) -> Tuple[int, int, int]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(int(x) * int(y) for x, y in zip(a, b))


def convex_hull_2d(points: Iterable[Sequence[int]]) -> List[Exponent]:
    """
    Counterclockwise hull vertices of plane integer points.

    Collinear boundary points are dropped. One distinct point gives a
    one-element list and collinear input gives the two extreme points.
    """
    pts = sorted({(int(p[0]), int(p[1])) for p in points})
    if len(pts) <= 2:
        return pts

    lower: List[Exponent] = []
    for p in pts:
        while len(lower) >= 2 and _cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Exponent] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def affine_dimension(points: np.ndarray) -> int:
    """Dimension of the affine hull of integer points."""
    points = np.asarray(points, dtype=np.int64)
    if len(points) <= 1:
        return 0
    differences = (points[1:] - points[0]).astype(float)
    return int(np.linalg.matrix_rank(differences))


def _polygon_inequalities(vertices: List[Exponent]) -> List[HalfSpace]:
    """Outward edge normals of a counterclockwise polygon."""
    inequalities = []
    for a, b in zip(vertices, vertices[1:] + vertices[:1]):
        normal = _primitive((b[1] - a[1], a[0] - b[0]))
        inequalities.append((normal, _dot(normal, a)))
    return inequalities


def _facets_3d(points: np.ndarray) -> List[HalfSpace]:
    """
    Facet planes of a full-dimensional integer point set.

    Every non-degenerate triple spans a candidate plane; the plane is a
    facet when all points lie on one side.
    """
    facets: Dict[Tuple[Tuple[int, ...], int], None] = {}
    pts = [tuple(int(v) for v in p) for p in points]
    matrix = np.asarray(pts, dtype=np.int64)
    for i, j, k in combinations(range(len(pts)), 3):
        normal = _cross3(
            [b - a for a, b in zip(pts[i], pts[j])],
            [b - a for a, b in zip(pts[i], pts[k])],
        )
        if normal == (0, 0, 0):
            continue
        normal = _primitive(normal)
        offset = _dot(normal, pts[i])
        side = matrix @ np.asarray(normal, dtype=np.int64) - offset
        if np.all(side <= 0):
            facets[(normal, offset)] = None
        elif np.all(side >= 0):
            facets[(tuple(-v for v in normal), -offset)] = None
    return list(facets)


def _segment_equalities(direction: Tuple[int, ...], dimension: int) -> List[HalfSpace]:
    """Integer normals spanning the orthogonal complement of a line."""
    if dimension == 1:
        return []
    if dimension == 2:
        return [(_primitive((-direction[1], direction[0])), 0)]
    normals: List[Tuple[int, ...]] = []
    for axis in range(3):
        unit = [0, 0, 0]
        unit[axis] = 1
        candidate = _cross3(direction, unit)
        if candidate == (0, 0, 0):
            continue
        if normals and _cross3(normals[0], candidate) == (0, 0, 0):
            continue
        normals.append(_primitive(candidate))
        if len(normals) == 2:
            break
    return [(normal, 0) for normal in normals]


def _describe(points: np.ndarray) -> Tuple[int, List[Exponent], List[HalfSpace], List[HalfSpace]]:
    """Affine dimension, vertices, inequalities and equalities of conv(points)."""
    n = points.shape[1]
    rank = affine_dimension(points)
    pts = sorted({tuple(int(v) for v in p) for p in points})

    if rank == 0:
        origin = pts[0]
        equalities = [(tuple(1 if i == j else 0 for i in range(n)), origin[j]) for j in range(n)]
        return 0, [origin], [], equalities

    if rank == 1:
        start, end = pts[0], pts[-1]
        direction = _primitive(tuple(b - a for a, b in zip(start, end)))
        equalities = [(normal, _dot(normal, start)) for normal, _ in _segment_equalities(direction, n)]
        inequalities = [
            (direction, _dot(direction, end)),
            (tuple(-v for v in direction), -_dot(direction, start)),
        ]
        return 1, [start, end], inequalities, equalities

    if n == 2:
        vertices = convex_hull_2d(pts)
        return 2, vertices, _polygon_inequalities(vertices), []

    if rank == 2:
        # planar polygon inside 3-space
        origin = np.asarray(pts[0], dtype=np.int64)
        differences = np.asarray(pts, dtype=np.int64) - origin
        normal = (0, 0, 0)
        for a, b in combinations(differences.tolist(), 2):
            normal = _cross3(a, b)
            if normal != (0, 0, 0):
                break
        normal = _primitive(normal)
        dropped = int(np.argmax(np.abs(normal)))
        kept = [axis for axis in range(3) if axis != dropped]
        lift = {(p[kept[0]], p[kept[1]]): p for p in pts}
        flat = convex_hull_2d(lift.keys())
        vertices = [lift[q] for q in flat]
        inequalities = []
        for normal_2d, offset in _polygon_inequalities(flat):
            full = [0, 0, 0]
            full[kept[0]], full[kept[1]] = normal_2d
            inequalities.append((tuple(full), offset))
        return 2, vertices, inequalities, [(normal, _dot(normal, pts[0]))]

    facets = _facets_3d(np.asarray(pts, dtype=np.int64))
    vertices = []
    for p in pts:
        tight = [normal for normal, offset in facets if _dot(normal, p) == offset]
        if len(tight) >= 3 and np.linalg.matrix_rank(np.asarray(tight, dtype=float)) == 3:
            vertices.append(p)
    return 3, vertices, facets, []


def _enumerate(vertices: List[Exponent], inequalities: List[HalfSpace],
               equalities: List[HalfSpace]) -> np.ndarray:
    """Integer points of the bounding box that satisfy the description."""
    corners = np.asarray(vertices, dtype=np.int64)
    lows, highs = corners.min(axis=0), corners.max(axis=0)
    axes = [np.arange(lo, hi + 1) for lo, hi in zip(lows, highs)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, len(axes))
    keep = np.ones(len(grid), dtype=bool)
    for normal, offset in inequalities:
        keep &= grid @ np.asarray(normal, dtype=np.int64) <= offset
    for normal, offset in equalities:
        keep &= grid @ np.asarray(normal, dtype=np.int64) == offset
    return grid[keep]


def _kind(point: Exponent, vertex_set: set, inequalities: List[HalfSpace]) -> PointKind:
    if point in vertex_set:
        return PointKind.VERTEX
    if any(_dot(normal, point) == offset for normal, offset in inequalities):
        return PointKind.BOUNDARY
    return PointKind.INTERIOR


def polytope_of_points(points: Iterable[Sequence[int]]) -> NewtonPolytope:
    """
    Convex hull of integer points with all of its lattice points.

    Args:
        points: Integer points of one dimension (1 to 3)

    Returns:
        NewtonPolytope
    """
    matrix = np.asarray([tuple(int(v) for v in p) for p in points], dtype=np.int64)
    if matrix.ndim != 2 or len(matrix) == 0:
        raise ValueError("need at least one point")
    n = matrix.shape[1]
    if not 1 <= n <= 3:
        raise DimensionError(f"polytopes are supported in dimensions 1 to 3, got {n}")

    rank, vertices, inequalities, equalities = _describe(matrix)
    lattice = sorted(tuple(int(v) for v in p) for p in _enumerate(vertices, inequalities, equalities))
    vertex_set = set(vertices)
    kinds = tuple(_kind(p, vertex_set, inequalities) for p in lattice)
    return NewtonPolytope(
        dimension=n,
        affine_dimension=rank,
        vertices=tuple(vertices),
        lattice_points=tuple(lattice),
        kinds=kinds,
        inequalities=tuple(inequalities),
        equalities=tuple(equalities),
    )


def newton_polytope(p: LaurentPolynomial) -> NewtonPolytope:
    """Newton polytope conv(support(p))."""
    polytope = polytope_of_points(p.support)
    logger.debug(
        f"Newton polytope: {polytope.vertex_count} vertices, "
        f"{polytope.lattice_count} lattice points"
    )
    return polytope


def lattice_points(polytope: NewtonPolytope) -> List[Exponent]:
    """All integer points of the polytope, sorted lexicographically."""
    return list(polytope.lattice_points)


def component_count_bounds(p: LaurentPolynomial) -> Tuple[int, int]:
    """(vertex count, lattice-point count) of the Newton polytope."""
    polytope = newton_polytope(p)
    return polytope.vertex_count, polytope.lattice_count


def is_maximally_sparse(p: LaurentPolynomial) -> bool:
    """True when the support is exactly the vertex set."""
    return set(p.support) == set(newton_polytope(p).vertices)


def classify_lattice_point(polytope: NewtonPolytope, point: Sequence[int]) -> PointKind:
    """Vertex, boundary, interior or outside."""
    point = tuple(int(v) for v in point)
    if len(point) != polytope.dimension or not polytope.contains(point):
        return PointKind.OUTSIDE
    return _kind(point, set(polytope.vertices), list(polytope.inequalities))


def upper_facets(
    exponents: Sequence[Sequence[int]],
    heights: Sequence[float],
    tol: float = 1e-9,
) -> List[Tuple[int, ...]]:
    """
    Cells of the regular subdivision induced by lifting plane points.

    Points (α, h_α) are lifted to 3-space; each upper-hull facet that is
    not vertical projects to one cell.

    Returns:
        Sorted tuples of indices of the points on each cell
    """
    alpha = np.asarray(exponents, dtype=float).reshape(-1, 2)
    h = np.asarray(heights, dtype=float)
    lifted = np.column_stack([alpha, h])
    scale = tol * (1.0 + np.abs(h).max())
    cells = set()
    for i, j, k in combinations(range(len(alpha)), 3):
        if _cross2(alpha[i], alpha[j], alpha[k]) == 0:
            continue
        normal = np.cross(lifted[j] - lifted[i], lifted[k] - lifted[i])
        if normal[2] < 0:
            normal = -normal
        height_gap = (lifted - lifted[i]) @ normal / normal[2]
        if np.all(height_gap <= scale):
            cells.add(tuple(int(v) for v in np.flatnonzero(np.abs(height_gap) <= scale)))
    return sorted(cells)
