"""
Amoeba pictures.

Renderers share one pixel grid convention (see ``RasterImage``) and
return images whose ``stats`` record how much work was done:

- naive: plot Log of the roots of many univariate slices
- grid: classify every pixel centre
- greedy: breadth-first flood from seed pixels on the amoeba
- archimedean: classify only a band around the Archimedean tropical curve
- report: paint the cells of a dichotomous component report
"""

import hashlib
from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np

from amoeba.membership import MembershipTester
from amoeba.sampling import slice_grid, slice_zeros
from amoeba.tropical import archimedean_tropicalization, tropical_hypersurface, tropical_vertices
from models.amoeba_model import AmoebaReport, DomainBox, MembershipStatus, OrderVector, RasterImage
from models.polynomial_model import LaurentPolynomial
from utils.config import Config
from utils.exceptions import DimensionError
from utils.logger_config import ProcessingLogger, get_logger

logger = get_logger("amoeba.render")

Color = Tuple[int, int, int]
Size = Tuple[int, int]

BACKGROUND: Color = (255, 255, 255)
AMOEBA_COLOR: Color = (0, 0, 0)
UNDECIDED_COLOR: Color = (128, 128, 128)

REPORT_BACKGROUND: Color = (24, 24, 24)
REPORT_AMOEBA: Color = (255, 255, 255)

FALLBACK_HALF_WIDTH = 5.0
VERIFY_STRIDE = 4

NEIGHBOURS = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))


def image_size(size: Optional[Union[int, Size]]) -> Size:
    """Normalize a size argument to (width, height)."""
    if size is None:
        side = Config().default_resolution
        return side, side
    if isinstance(size, int):
        return size, size
    width, height = size
    return int(width), int(height)


def _require_plane(p: LaurentPolynomial, what: str) -> None:
    if p.arity != 2:
        raise DimensionError(f"{what} needs two variables, got {p.arity}")


def palette(order: OrderVector) -> Color:
    """Deterministic flat colour of a complement component."""
    digest = hashlib.md5(",".join(str(v) for v in order).encode("ascii")).digest()
    return tuple(64 + b % 176 for b in digest[:3])


# ----------------------------------------------------------------------
# Domain


def auto_domain(p: LaurentPolynomial, padding: Optional[float] = None) -> DomainBox:
    """
    Viewing box around the Archimedean tropical hypersurface.

    The bounding box of the tropical vertices is padded on every side;
    plane polynomials without vertices (all exponents collinear) use the
    base points of their parallel tropical lines. Falls back to
    [-5, 5]ⁿ when nothing is found.
    """
    padding = Config().domain_padding if padding is None else float(padding)
    n = p.arity
    t = archimedean_tropicalization(p)

    points = [point for point, _ in tropical_vertices(t)]
    if not points and n == 2 and len(t) >= 2:
        points = [edge.start for edge in tropical_hypersurface(t).edges]
    if not points:
        logger.info("Degenerate tropicalization, using the fallback domain")
        return DomainBox.cube(-FALLBACK_HALF_WIDTH, FALLBACK_HALF_WIDTH, n)

    points = np.asarray(points, dtype=float)
    lows = points.min(axis=0) - padding
    highs = points.max(axis=0) + padding
    flat = highs - lows < 1e-9
    lows[flat] -= 1.0
    highs[flat] += 1.0
    return DomainBox(tuple((float(lo), float(hi)) for lo, hi in zip(lows, highs)))


# ----------------------------------------------------------------------
# Painting helpers


def render_points(
    points: np.ndarray,
    domain: DomainBox,
    size: Optional[Union[int, Size]] = None,
    color: Color = AMOEBA_COLOR,
    image: Optional[RasterImage] = None,
) -> Tuple[RasterImage, int]:
    """
    Plot plane points as single pixels.

    Returns:
        Tuple (image, number of points that fell inside the domain)
    """
    if image is None:
        width, height = image_size(size)
        image = RasterImage.blank(width, height, domain, BACKGROUND)
    rows, cols, inside = image.point_to_pixel(points)
    image.pixels[rows[inside], cols[inside]] = color
    return image, int(inside.sum())


def _paint_status(image: RasterImage, flat: np.ndarray, status: np.ndarray) -> Dict[str, int]:
    rows, cols = np.divmod(flat, image.width)
    amoeba = status == MembershipStatus.AMOEBA.code
    undecided = status == MembershipStatus.UNDECIDED.code
    image.pixels[rows[amoeba], cols[amoeba]] = AMOEBA_COLOR
    image.pixels[rows[undecided], cols[undecided]] = UNDECIDED_COLOR
    return {"amoeba": int(amoeba.sum()), "undecided": int(undecided.sum())}


def _neighbours(flat: np.ndarray, height: int, width: int) -> np.ndarray:
    """Sorted 8-neighbours of the given pixels."""
    rows, cols = np.divmod(flat, width)
    found = []
    for dr, dc in NEIGHBOURS:
        r, c = rows + dr, cols + dc
        ok = (r >= 0) & (r < height) & (c >= 0) & (c < width)
        found.append(r[ok] * width + c[ok])
    if not found:
        return np.empty(0, dtype=np.int64)
    return np.unique(np.concatenate(found))


def _dilate(mask: np.ndarray, radius: int) -> np.ndarray:
    """Square dilation of a boolean mask."""
    height, width = mask.shape
    out = mask.copy()
    for dr in range(-radius, radius + 1):
        for dc in range(-radius, radius + 1):
            target = out[max(0, dr):height + min(0, dr), max(0, dc):width + min(0, dc)]
            target |= mask[max(0, -dr):height - max(0, dr), max(0, -dc):width - max(0, dc)]
    return out


def _tropical_pixels(p: LaurentPolynomial, image: RasterImage) -> np.ndarray:
    """Flat indices of pixels crossed by the Archimedean tropical curve."""
    t = archimedean_tropicalization(p)
    if len(t) < 2:
        return np.empty(0, dtype=np.int64)
    curve = tropical_hypersurface(t)
    if curve.is_empty:
        return np.empty(0, dtype=np.int64)
    lows, highs = image.domain.lows, image.domain.highs
    reach = float(np.linalg.norm(np.maximum(np.abs(lows), np.abs(highs)))) * 2.0 + float(
        np.linalg.norm(highs - lows)
    )
    per_edge = 4 * max(image.width, image.height)
    points = curve.sample_points(per_edge=per_edge, ray_length=reach)
    if curve.vertices:
        points = np.concatenate([points, np.asarray(curve.vertices, dtype=float)])
    rows, cols, inside = image.point_to_pixel(points)
    return np.unique(rows[inside] * image.width + cols[inside])


# ----------------------------------------------------------------------
# Renderers


def naive_render(
    p: LaurentPolynomial,
    domain: DomainBox,
    grid: Optional[Union[int, Tuple[int, int]]] = None,
    size: Optional[Union[int, Size]] = None,
    n_jobs: Optional[int] = None,
) -> Tuple[RasterImage, int]:
    """
    Plot the Log image of slice roots.

    For both variable roles, the fixed coordinate sweeps a grid of
    log-moduli over the domain axis and arguments over [0, 2π); every
    nonzero root of the restricted polynomial is plotted at
    (x, ln|root|) when it falls inside the domain.

    Args:
        p: Plane polynomial
        domain: Plane box
        grid: (modulus steps, argument steps), or one number for both
        size: Image size (width, height)
        n_jobs: Worker count

    Returns:
        Tuple (image, number of plotted points)
    """
    _require_plane(p, "naive rendering")
    if grid is None:
        grid = Config().default_grid
    if isinstance(grid, int):
        grid = (grid, grid)
    width, height = image_size(size)
    image = RasterImage.blank(width, height, domain, BACKGROUND)

    plotted = skipped = 0
    with ProcessingLogger("naive render", logger) as timer:
        for fixed_axis in (0, 1):
            lo, hi = domain.intervals[fixed_axis]
            params = slice_grid(lo, hi, grid[0], grid[1])
            points, _, missed = slice_zeros(p, fixed_axis, params, n_jobs=n_jobs)
            logs = np.log(np.abs(points))
            _, count = render_points(logs, domain, image=image)
            plotted += count
            skipped += missed
    if skipped:
        logger.info(f"Naive render skipped {skipped} degenerate slices")
    image.stats = {
        "algorithm": "naive",
        "grid": list(grid),
        "plotted": plotted,
        "skipped": skipped,
        "seconds": timer.elapsed,
    }
    return image, plotted


def pixel_membership_render(
    p: LaurentPolynomial,
    domain: DomainBox,
    size: Optional[Union[int, Size]] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    n_jobs: Optional[int] = None,
) -> RasterImage:
    """Classify every pixel centre; amoeba and undecided pixels are painted."""
    _require_plane(p, "pixel rendering")
    width, height = image_size(size)
    image = RasterImage.blank(width, height, domain, BACKGROUND)
    tester = MembershipTester(p, samples=samples, seed=seed)

    with ProcessingLogger("pixel render", logger) as timer:
        centres = image.pixel_centers().reshape(-1, 2)
        batch = tester.classify_many(centres, n_jobs=n_jobs)
        counts = _paint_status(image, np.arange(len(centres)), batch.status)
    image.stats = {
        "algorithm": "grid",
        "tested": width * height,
        "tested_fraction": 1.0,
        "painted": counts["amoeba"] + counts["undecided"],
        **counts,
        "seconds": timer.elapsed,
    }
    return image


def greedy_render(
    p: LaurentPolynomial,
    domain: DomainBox,
    size: Optional[Union[int, Size]] = None,
    samples: Optional[int] = None,
    seeds: Optional[np.ndarray] = None,
    seed: Optional[int] = None,
    n_jobs: Optional[int] = None,
) -> RasterImage:
    """
    Flood the amoeba from seed pixels.

    Pixels are classified level by level; amoeba and undecided pixels
    queue their untested 8-neighbours. A verification pass then tests
    every fourth pixel per axis; verification hits the flood never
    reached are logged, recorded in ``stats["warnings"]`` and flooded
    from as extra seeds.

    Args:
        p: Plane polynomial
        domain: Plane box
        size: Image size (width, height)
        samples: Fibers per axis
        seeds: Plane seed points (default: Archimedean tropical curve samples)
        seed: Fiber sequence seed
        n_jobs: Worker count
    """
    _require_plane(p, "greedy rendering")
    width, height = image_size(size)
    image = RasterImage.blank(width, height, domain, BACKGROUND)
    tester = MembershipTester(p, samples=samples, seed=seed)
    centres = image.pixel_centers().reshape(-1, 2)
    status = np.full(width * height, -1, dtype=np.int8)
    complement = MembershipStatus.COMPLEMENT.code

    def test(flat: np.ndarray) -> np.ndarray:
        todo = flat[status[flat] < 0]
        if len(todo):
            status[todo] = tester.classify_many(centres[todo], n_jobs=n_jobs).status
        return todo

    def flood(frontier: np.ndarray) -> None:
        while len(frontier):
            tested = test(frontier)
            painted = tested[status[tested] != complement]
            frontier = _neighbours(painted, height, width)
            frontier = frontier[status[frontier] < 0]

    warnings = []
    with ProcessingLogger("greedy render", logger) as timer:
        if seeds is None:
            start = _tropical_pixels(p, image)
        else:
            rows, cols, inside = image.point_to_pixel(np.asarray(seeds, dtype=float))
            start = np.unique(rows[inside] * width + cols[inside])
        flood(start)

        grid_rows, grid_cols = np.meshgrid(
            np.arange(0, height, VERIFY_STRIDE), np.arange(0, width, VERIFY_STRIDE), indexing="ij"
        )
        checked = (grid_rows * width + grid_cols).ravel()
        fresh = test(checked)
        missed = fresh[status[fresh] != complement]
        if len(missed):
            message = (
                f"Seeds missed {len(missed)} amoeba pixels found by the verification pass"
            )
            logger.warning(message)
            warnings.append(message)
            flood(_neighbours(missed, height, width))

        flat = np.flatnonzero(status >= 0)
        counts = _paint_status(image, flat, status[flat])

    image.stats = {
        "algorithm": "greedy",
        "tested": int(len(flat)),
        "tested_fraction": len(flat) / (width * height),
        "painted": counts["amoeba"] + counts["undecided"],
        **counts,
        "seeds": int(len(start)),
        "warnings": warnings,
        "seconds": timer.elapsed,
    }
    return image


def archimedean_render(
    p: LaurentPolynomial,
    domain: DomainBox,
    size: Optional[Union[int, Size]] = None,
    samples: Optional[int] = None,
    band: int = 3,
    seed: Optional[int] = None,
    n_jobs: Optional[int] = None,
) -> RasterImage:
    """
    Classify only pixels near the Archimedean tropical curve.

    Args:
        band: Half-width of the tested band in pixels
    """
    _require_plane(p, "archimedean rendering")
    width, height = image_size(size)
    image = RasterImage.blank(width, height, domain, BACKGROUND)
    tester = MembershipTester(p, samples=samples, seed=seed)

    with ProcessingLogger("archimedean render", logger) as timer:
        mask = np.zeros(width * height, dtype=bool)
        mask[_tropical_pixels(p, image)] = True
        mask = _dilate(mask.reshape(height, width), max(int(band), 0)).ravel()
        flat = np.flatnonzero(mask)
        centres = image.pixel_centers().reshape(-1, 2)
        status = tester.classify_many(centres[flat], n_jobs=n_jobs).status
        counts = _paint_status(image, flat, status)

    image.stats = {
        "algorithm": "archimedean",
        "band": int(band),
        "tested": int(len(flat)),
        "tested_fraction": len(flat) / (width * height),
        "painted": counts["amoeba"] + counts["undecided"],
        **counts,
        "seconds": timer.elapsed,
    }
    return image


def _box_pixels(image: RasterImage, box: DomainBox) -> Tuple[slice, slice]:
    """Pixels whose centres lie in the half-open box."""
    (x0, x1), (y0, y1) = image.domain.intervals
    (bx0, bx1), (by0, by1) = box.intervals
    col_start = int(np.ceil((bx0 - x0) / (x1 - x0) * image.width - 0.5))
    col_stop = int(np.ceil((bx1 - x0) / (x1 - x0) * image.width - 0.5))
    row_start = int(np.ceil((y1 - by1) / (y1 - y0) * image.height - 0.5))
    row_stop = int(np.ceil((y1 - by0) / (y1 - y0) * image.height - 0.5))
    return (
        slice(max(row_start, 0), max(min(row_stop, image.height), 0)),
        slice(max(col_start, 0), max(min(col_stop, image.width), 0)),
    )


def render_report(report: AmoebaReport, size: Optional[Union[int, Size]] = None) -> RasterImage:
    """
    Paint a component report.

    Complement cells take their component's palette colour, amoeba
    cells are white and the rest stays dark.
    """
    if report.domain.dimension != 2:
        raise DimensionError("only plane reports can be painted")
    width, height = image_size(size)
    image = RasterImage.blank(width, height, report.domain, REPORT_BACKGROUND)
    for box in report.amoeba_boxes:
        image.pixels[_box_pixels(image, box)] = REPORT_AMOEBA
    for component in report.components:
        color = palette(component.order)
        for box in component.cells:
            image.pixels[_box_pixels(image, box)] = color
    image.stats = {
        "algorithm": report.algorithm,
        "components": report.component_count,
        "bounded": len(report.bounded_components),
    }
    return image


def render(
    p: LaurentPolynomial,
    algorithm: str,
    domain: Optional[DomainBox] = None,
    size: Optional[Union[int, Size]] = None,
    samples: Optional[int] = None,
    grid: Optional[Union[int, Sequence[int]]] = None,
    seed: Optional[int] = None,
    n_jobs: Optional[int] = None,
) -> RasterImage:
    """Dispatch to a renderer by algorithm name (dichotomous excluded)."""
    domain = domain or auto_domain(p)
    if algorithm == "naive":
        image, _ = naive_render(p, domain, grid=grid, size=size, n_jobs=n_jobs)
        return image
    if algorithm == "grid":
        return pixel_membership_render(p, domain, size, samples=samples, seed=seed, n_jobs=n_jobs)
    if algorithm == "greedy":
        return greedy_render(p, domain, size, samples=samples, seed=seed, n_jobs=n_jobs)
    if algorithm == "archimedean":
        return archimedean_render(p, domain, size, samples=samples, seed=seed, n_jobs=n_jobs)
    raise ValueError(f"unknown rendering algorithm '{algorithm}'")
