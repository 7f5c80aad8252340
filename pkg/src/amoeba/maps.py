"""
Images of the zero locus under the Arg map, the moment map and the
logarithmic Gauss reality condition.
"""

from typing import List, Optional, Tuple, Union

import numpy as np

from algebra.evaluation import (
    SliceBuilder,
    TWO_PI,
    evaluate_many,
    partial_logarithmic_derivative,
    pairing,
    term_magnitudes,
    wrap_angle,
)
from algebra.newton import newton_polytope
from algebra.roots import batch_roots
from amoeba.render import AMOEBA_COLOR, BACKGROUND, render_points, image_size
from amoeba.sampling import slice_grid, slice_zeros
from models.amoeba_model import DomainBox, RasterImage
from models.numeric_model import ZeroSample
from models.polynomial_model import Exponent, LaurentPolynomial
from utils.config import Config
from utils.exceptions import DimensionError, ZeroCoordinateError
from utils.logger_config import ProcessingLogger, get_logger

logger = get_logger("amoeba.maps")

RESIDUAL_TOLERANCE = 1e-8
CONTOUR_TOLERANCE = 1e-10
CONTOUR_STEPS = 60
OUTLINE_COLOR = (200, 0, 0)

TORUS = DomainBox(((0.0, TWO_PI), (0.0, TWO_PI)))


def _require_plane(p: LaurentPolynomial, what: str) -> None:
    if p.arity != 2:
        raise DimensionError(f"{what} needs two variables, got {p.arity}")


def sample_zero_locus(
    p: LaurentPolynomial,
    domain: DomainBox,
    density: Optional[int] = None,
    n_jobs: Optional[int] = None,
) -> ZeroSample:
    """
    Points of {p = 0} from slices in both variable roles.

    For each role, density² slices (log-modulus over the domain axis ×
    argument over [0, 2π)) are solved. Roots whose residual exceeds
    1e-8 times the term-magnitude sum are discarded and counted as
    skipped, like degenerate slices.
    """
    _require_plane(p, "zero-locus sampling")
    density = Config().default_grid if density is None else int(density)

    points, parameters, skipped = [], [], 0
    for fixed_axis in (0, 1):
        lo, hi = domain.intervals[fixed_axis]
        found, sources, missed = slice_zeros(p, fixed_axis, slice_grid(lo, hi, density, density), n_jobs)
        points.append(found)
        parameters.append(np.column_stack([np.full(len(found), fixed_axis, dtype=float), sources]))
        skipped += missed

    points = np.concatenate(points)
    parameters = np.concatenate(parameters)
    residuals = np.abs(evaluate_many(p, points)) if len(points) else np.empty(0)
    scale = term_magnitudes(p, points).sum(axis=1) if len(points) else np.empty(0)
    good = residuals <= RESIDUAL_TOLERANCE * scale
    if not np.all(good):
        logger.info(f"Discarded {int((~good).sum())} zero samples with large residuals")
    return ZeroSample(
        points=points[good],
        residuals=residuals[good],
        parameters=parameters[good],
        skipped=skipped + int((~good).sum()),
    )


def coamoeba_points(sample: ZeroSample) -> np.ndarray:
    """Componentwise arguments in [0, 2π), shape (K, n)."""
    if len(sample) == 0:
        return np.empty((0, 2))
    if np.any(sample.points == 0):
        raise ZeroCoordinateError("Arg is undefined at a zero coordinate")
    return wrap_angle(np.angle(sample.points))


def coamoeba_raster(points: np.ndarray, size: Optional[Union[int, Tuple[int, int]]] = None) -> RasterImage:
    """Coamoeba points painted on the torus square [0, 2π)²."""
    image, count = render_points(points, TORUS, size, AMOEBA_COLOR)
    image.stats = {"plotted": count}
    return image


def moment_map_many(p: LaurentPolynomial, points: np.ndarray) -> np.ndarray:
    """
    μ(z) = Σ |c_α z^α|·α / Σ |c_α z^α| for many points.

    Weights are computed in the log domain so large moduli do not
    overflow.
    """
    points = np.asarray(points, dtype=np.complex128).reshape(-1, p.arity)
    if np.any(points == 0):
        raise ZeroCoordinateError("the moment map needs nonzero coordinates")
    logs = np.log(np.abs(p.coefficients))[None, :] + pairing(np.log(np.abs(points)), p.exponents)
    weights = np.exp(logs - logs.max(axis=1, keepdims=True))
    weights /= weights.sum(axis=1, keepdims=True)
    return weights @ p.exponents.astype(float)


def moment_map(p: LaurentPolynomial, z) -> Tuple[float, ...]:
    """μ(z) at one point; always inside the Newton polytope."""
    return tuple(float(v) for v in moment_map_many(p, np.asarray([z]))[0])


def compactified_amoeba(p: LaurentPolynomial, sample: ZeroSample) -> Tuple[np.ndarray, List[Exponent]]:
    """
    Moment-map image of a zero sample.

    Returns:
        Tuple (points of shape (K, n), closed polygon outline of the
        Newton polytope, counterclockwise for plane polygons)
    """
    outline = list(newton_polytope(p).vertices)
    if outline:
        outline.append(outline[0])
    if len(sample) == 0:
        return np.empty((0, p.arity)), outline
    return moment_map_many(p, sample.points), outline


def compactified_raster(
    points: np.ndarray,
    outline: List[Exponent],
    size: Optional[Union[int, Tuple[int, int]]] = None,
    margin: float = 0.25,
) -> RasterImage:
    """Moment-map points drawn inside the Newton polygon outline."""
    corners = np.asarray(outline, dtype=float).reshape(-1, 2)
    lows = corners.min(axis=0) - margin
    highs = corners.max(axis=0) + margin
    domain = DomainBox(tuple((float(a), float(b)) for a, b in zip(lows, highs)))
    width, height = image_size(size)
    image = RasterImage.blank(width, height, domain, BACKGROUND)

    steps = 4 * max(width, height)
    t = np.linspace(0.0, 1.0, steps)[:, None]
    for a, b in zip(corners[:-1], corners[1:]):
        render_points(a + t * (b - a), domain, image=image, color=OUTLINE_COLOR)
    _, count = render_points(points, domain, image=image)
    image.stats = {"plotted": count}
    return image


class _RealityCondition:
    """g(z) = Im(γ₁(z)·conj(γ₂(z))) with γ_j = z_j·∂p/∂z_j."""

    def __init__(self, p: LaurentPolynomial):
        self.gammas = [partial_logarithmic_derivative(p, j) for j in (1, 2)]

    def __call__(self, points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Values and magnitude scales at points of shape (K, 2)."""
        v1 = evaluate_many(self.gammas[0], points)
        v2 = evaluate_many(self.gammas[1], points)
        scale = term_magnitudes(self.gammas[0], points).sum(axis=1) * term_magnitudes(
            self.gammas[1], points
        ).sum(axis=1)
        return (v1 * np.conj(v2)).imag, scale


def _plane_points(fixed_axis: int, fixed: np.ndarray, free: np.ndarray) -> np.ndarray:
    points = np.empty(fixed.shape + (2,), dtype=np.complex128)
    points[..., fixed_axis] = fixed
    points[..., 1 - fixed_axis] = free
    return points


def _nearest(roots: np.ndarray, guess: np.ndarray) -> np.ndarray:
    gaps = np.abs(roots - guess[:, None])
    gaps = np.where(np.isfinite(gaps), gaps, np.inf)
    return roots[np.arange(len(roots)), np.argmin(gaps, axis=1)]


def _contour_role(
    p: LaurentPolynomial,
    g: _RealityCondition,
    fixed_axis: int,
    xs: np.ndarray,
    argument_steps: int,
) -> np.ndarray:
    """Zeros of p on the contour met along the fibers |z_fixed| = e^x, shape (K, 2)."""
    builder = SliceBuilder(p, 1 - fixed_axis)
    step = TWO_PI / argument_steps
    thetas = (np.arange(argument_steps) + 0.5) * step
    grid_x, grid_t = np.meshgrid(xs, thetas, indexing="ij")
    rows = np.zeros((grid_x.size, 2))
    rows[:, fixed_axis] = grid_x.ravel()
    coefficients, degenerate = builder.build(rows, grid_t.reshape(-1, 1))
    roots, converged, empty = batch_roots(coefficients)
    d = roots.shape[1]
    if d == 0:
        return np.empty((0, 2), dtype=np.complex128)
    bad = degenerate | empty | ~converged | ~np.all(np.isfinite(roots), axis=1)
    roots = roots.reshape(len(xs), argument_steps, d)
    bad = bad.reshape(len(xs), argument_steps)

    fixed = np.exp(grid_x + 1j * grid_t)
    safe = np.where(np.isfinite(roots), roots, 1.0)
    values, _ = g(_plane_points(fixed_axis, np.repeat(fixed[..., None], d, axis=2), safe).reshape(-1, 2))
    positive = (values > 0).reshape(len(xs), argument_steps, d)

    # match each root to its nearest neighbour on the next fiber
    following = np.roll(roots, -1, axis=1)
    perm = np.argmin(np.abs(roots[..., :, None] - following[..., None, :]), axis=-1)
    injective = np.all(np.sort(perm, axis=-1) == np.arange(d), axis=-1)
    usable = ~bad & ~np.roll(bad, -1, axis=1) & injective
    next_positive = np.take_along_axis(np.roll(positive, -1, axis=1), perm, axis=-1)
    change = (positive != next_positive) & usable[..., None]

    m, k, i = np.nonzero(change)
    if len(m) == 0:
        return np.empty((0, 2), dtype=np.complex128)
    x = xs[m]
    lo = thetas[k].copy()
    hi = lo + step
    root_lo = roots[m, k, i]
    root_hi = np.take_along_axis(following, perm, axis=-1)[m, k, i]
    sign_lo = positive[m, k, i]
    best = root_lo.copy()
    angle = lo.copy()
    done = np.zeros(len(m), dtype=bool)

    for _ in range(CONTOUR_STEPS):
        active = np.flatnonzero(~done)
        if len(active) == 0:
            break
        mid = 0.5 * (lo[active] + hi[active])
        query = np.zeros((len(active), 2))
        query[:, fixed_axis] = x[active]
        slice_rows, slice_degenerate = builder.build(query, mid[:, None])
        found, ok, slice_empty = batch_roots(slice_rows)
        root = _nearest(found, 0.5 * (root_lo[active] + root_hi[active]))
        failed = slice_degenerate | slice_empty | ~ok | ~np.isfinite(root)
        root = np.where(failed, best[active], root)
        value, scale = g(_plane_points(fixed_axis, np.exp(x[active] + 1j * mid), root))
        best[active] = root
        angle[active] = np.where(failed, angle[active], mid)
        hit = failed | (np.abs(value) <= CONTOUR_TOLERANCE * scale)
        done[active[hit]] = True
        same = (value > 0) == sign_lo[active]
        move_lo = ~hit & same
        move_hi = ~hit & ~same
        lo[active[move_lo]] = mid[move_lo]
        root_lo[active[move_lo]] = root[move_lo]
        hi[active[move_hi]] = mid[move_hi]
        root_hi[active[move_hi]] = root[move_hi]

    zeros = _plane_points(fixed_axis, np.exp(x + 1j * angle), best)
    keep = np.all(np.isfinite(zeros), axis=1) & np.all(zeros != 0, axis=1)
    return zeros[keep]


def contour_points(
    p: LaurentPolynomial,
    domain: DomainBox,
    density: Optional[int] = None,
    argument_steps: Optional[int] = None,
    with_zeros: bool = False,
) -> Union[np.ndarray, Tuple[np.ndarray, np.ndarray]]:
    """
    Log images of points where the logarithmic Gauss map is real.

    Along each fiber circle |z_fixed| = e^x the slice roots are tracked
    in the argument; sign changes of g = Im(γ₁·conj γ₂) are bisected
    until |g| ≤ 1e-10 times its magnitude scale. Both variable roles are
    swept. Arcs tangent to the fibers can be missed at low density.

    Args:
        p: Plane polynomial depending on both variables
        domain: Box whose axes give the log-modulus sweeps
        density: Log-modulus steps per role (config grid default)
        argument_steps: Argument steps per fiber (default 4·density)
        with_zeros: Also return the zero of p behind each point

    Returns:
        Log points, shape (K, 2), sorted lexicographically; with
        ``with_zeros`` a pair (points, zeros) where ``zeros[i]`` is a
        point of (ℂ*)² with p(zeros[i]) ≈ 0 and Log(zeros[i]) = points[i]
    """
    _require_plane(p, "contour sampling")
    density = Config().default_grid if density is None else int(density)
    argument_steps = 4 * density if argument_steps is None else int(argument_steps)
    g = _RealityCondition(p)

    with ProcessingLogger("contour sampling", logger):
        parts = []
        for fixed_axis in (0, 1):
            lo, hi = domain.intervals[fixed_axis]
            xs = np.linspace(lo, hi, density)
            parts.append(_contour_role(p, g, fixed_axis, xs, argument_steps))
        zeros = np.concatenate(parts)
    points = np.log(np.abs(zeros))
    order = np.lexsort((points[:, 1], points[:, 0]))
    points, zeros = points[order], zeros[order]
    return (points, zeros) if with_zeros else points
