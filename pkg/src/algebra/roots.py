"""
Univariate complex root finding.

All roots of many polynomials are found at once with the Aberth-Ehrlich
simultaneous iteration. Rows are independent: a row's roots depend only
on its own coefficients, never on the rest of the batch.
"""

from typing import Optional, Sequence, Tuple

import numpy as np

from models.numeric_model import RootSet
from utils.config import Config
from utils.exceptions import DegreeError, RootNearCircle
from utils.logger_config import get_logger

logger = get_logger("amoeba.roots")

ZERO_THRESHOLD = 1e-300
MAX_ITERATIONS = 120
STEP_TOLERANCE = 1e-14
CLUSTER_TOLERANCE = 1e-7


def _horner(coefficients: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Evaluate ascending coefficient rows (N, d+1) at points (N, k)."""
    value = np.repeat(coefficients[:, -1:], z.shape[1], axis=1)
    for k in range(coefficients.shape[1] - 2, -1, -1):
        value = value * z + coefficients[:, k:k + 1]
    return value


def _initial_guesses(coefficients: np.ndarray) -> np.ndarray:
    """
    Starting points on circles read off the upper hull of (k, ln|b_k|).

    Roots belonging to one hull edge from vertex a to vertex b start on
    the circle of radius (|b_a|/|b_b|)^(1/(b-a)), spread evenly in angle.
    """
    n_rows, width = coefficients.shape
    d = width - 1
    magnitudes = np.abs(coefficients)
    scale = magnitudes.max(axis=1, keepdims=True)
    heights = np.log(magnitudes + ZERO_THRESHOLD * scale)

    index = np.arange(width)
    on_hull = np.ones((n_rows, width), dtype=bool)
    for k in range(1, d):
        left = index[:k]
        right = index[k + 1:]
        weight = (k - left)[:, None] / (right[None, :] - left[:, None])
        chord = heights[:, :k, None] + (heights[:, None, k + 1:] - heights[:, :k, None]) * weight
        on_hull[:, k] = np.all(heights[:, k, None, None] >= chord, axis=(1, 2))

    previous = np.maximum.accumulate(np.where(on_hull, index, 0), axis=1)[:, :d]
    following = np.minimum.accumulate(np.where(on_hull, index, d)[:, ::-1], axis=1)[:, ::-1][:, 1:]

    h_prev = np.take_along_axis(heights, previous, axis=1)
    h_next = np.take_along_axis(heights, following, axis=1)
    span = following - previous
    radius = np.exp((h_prev - h_next) / span)

    s = index[:d][None, :]
    angle = 2.0 * np.pi * (s - previous) / span + 2.0 * np.pi * previous / d + 0.7
    return radius * np.exp(1j * angle)


def scaled_residuals(coefficients: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """
    |q(r)| / (max|b|·max(1, |r|)^d) for every root.

    Roots outside the unit circle are evaluated through the reversed
    polynomial at 1/r, which avoids overflow.
    """
    scale = np.abs(coefficients).max(axis=1, keepdims=True)
    outside = np.abs(roots) > 1.0
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        inner = _horner(coefficients, np.where(outside, 0.0, roots))
        outer = _horner(coefficients[:, ::-1], np.where(outside, 1.0 / roots, 0.0))
    return np.abs(np.where(outside, outer, inner)) / scale


def aberth_batch(
    coefficients: np.ndarray,
    max_iterations: int = MAX_ITERATIONS,
    tolerance: Optional[float] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    All roots of many polynomials of one degree.

    Args:
        coefficients: Ascending coefficients, shape (N, d+1), d ≥ 1,
            with nonzero first and last columns
        max_iterations: Iteration cap
        tolerance: Residual bound for the converged flag (config default)

    Returns:
        Tuple (roots of shape (N, d), converged flags of shape (N,))
    """
    tolerance = Config().root_tolerance if tolerance is None else tolerance
    coefficients = np.asarray(coefficients, dtype=np.complex128)
    n_rows, width = coefficients.shape
    d = width - 1
    if d < 1:
        raise DegreeError("aberth_batch needs degree at least 1")

    scale = np.abs(coefficients).max(axis=1, keepdims=True)
    coefficients = coefficients / scale

    if d == 1:
        roots = (-coefficients[:, 0] / coefficients[:, 1])[:, None]
        residual = scaled_residuals(coefficients, roots)
        return roots, np.all(residual <= tolerance, axis=1)

    derivative = coefficients[:, 1:] * np.arange(1, width)[None, :]
    z = _initial_guesses(coefficients)
    active = np.ones_like(z, dtype=bool)
    diagonal = np.arange(d)

    for _ in range(max_iterations):
        rows = np.flatnonzero(active.any(axis=1))
        if len(rows) == 0:
            break
        zr = z[rows]
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            value = _horner(coefficients[rows], zr)
            slope = _horner(derivative[rows], zr)
            ratio = value / slope
            inverse_gaps = 1.0 / (zr[:, :, None] - zr[:, None, :])
            inverse_gaps[:, diagonal, diagonal] = 0.0
            repulsion = inverse_gaps.sum(axis=2)
            delta = ratio / (1.0 - ratio * repulsion)

        stuck = ~np.isfinite(delta)
        if np.any(stuck):
            nudge = 1e-3 * (1.0 + np.abs(np.nan_to_num(zr)))
            delta = np.where(stuck, np.where(value == 0, 0.0, nudge), delta)

        step = np.where(active[rows], delta, 0.0)
        updated = zr - step
        z[rows] = updated
        settled = np.abs(delta) <= STEP_TOLERANCE * np.abs(updated) + ZERO_THRESHOLD
        active[rows] &= ~settled

    residual = scaled_residuals(coefficients, z)
    converged = np.all(residual <= tolerance, axis=1)
    return z, converged


def _trim(coefficients: np.ndarray) -> Tuple[np.ndarray, int]:
    """Drop negligible top coefficients and count zero roots at the bottom."""
    magnitudes = np.abs(coefficients)
    keep = magnitudes > ZERO_THRESHOLD * magnitudes.max()
    first = int(np.argmax(keep))
    last = len(coefficients) - 1 - int(np.argmax(keep[::-1]))
    return coefficients[first:last + 1], first


def all_roots(coefficients: Sequence[complex], tolerance: Optional[float] = None) -> RootSet:
    """
    All complex roots of q(w) = Σ b_k w^k.

    Args:
        coefficients: Ascending coefficients b_0..b_d
        tolerance: Residual bound (config default)

    Returns:
        RootSet with one root per unit of degree, zero roots included

    Raises:
        DegreeError: All coefficients are zero
    """
    b = np.asarray(coefficients, dtype=np.complex128).reshape(-1)
    if b.size == 0 or not np.any(np.abs(b) > 0):
        raise DegreeError("all coefficients are zero")

    core, zero_roots = _trim(b)
    zeros = np.zeros(zero_roots, dtype=np.complex128)
    if len(core) == 1:
        return RootSet(roots=zeros, residual=0.0, converged=True)

    roots, converged = aberth_batch(core[None, :], tolerance=tolerance)
    residual = float(scaled_residuals(core[None, :] / np.abs(core).max(), roots).max())
    if not converged[0]:
        logger.warning(f"Root finder did not converge (scaled residual {residual:.3g})")
    return RootSet(
        roots=np.concatenate([zeros, roots[0]]),
        residual=residual,
        converged=bool(converged[0]),
    )


def root_multiplicities(roots: np.ndarray, tolerance: float = CLUSTER_TOLERANCE) -> Tuple[np.ndarray, np.ndarray]:
    """
    Group roots closer than ``tolerance``·scale.

    Returns:
        Tuple (cluster centres, multiplicities)
    """
    roots = np.asarray(roots, dtype=np.complex128)
    if roots.size == 0:
        return roots, np.zeros(0, dtype=int)
    scale = max(1.0, float(np.abs(roots).max()))
    remaining = list(np.argsort(np.abs(roots), kind="stable"))
    centres, counts = [], []
    while remaining:
        seed = remaining.pop(0)
        members = [seed] + [i for i in remaining if abs(roots[i] - roots[seed]) <= tolerance * scale]
        remaining = [i for i in remaining if i not in members]
        centres.append(roots[members].mean())
        counts.append(len(members))
    return np.array(centres), np.array(counts)


def count_roots_in_disk(
    coefficients: Sequence[complex],
    min_exponent: int,
    radius: float,
    rel_tol: Optional[float] = None,
) -> int:
    """
    Zeros minus pole order of a Laurent polynomial inside |w| < radius.

    Args:
        coefficients: Dense coefficients b_m..b_M
        min_exponent: m, the exponent of the first coefficient
        radius: Disk radius
        rel_tol: Relative half-width of the circle band
            (default: circle tolerance · (1 + |ln radius|))

    Returns:
        Number of roots of the polynomial part inside the disk, plus m

    Raises:
        RootNearCircle: Some root modulus lies in the circle band
    """
    if rel_tol is None:
        rel_tol = Config().circle_tolerance * (1.0 + abs(np.log(radius)))
    root_set = all_roots(coefficients)
    moduli = np.abs(root_set.roots)
    near = np.abs(moduli - radius) <= rel_tol * radius
    if np.any(near):
        raise RootNearCircle(float(moduli[near][0]), radius)
    return int(np.sum(moduli < radius)) + int(min_exponent)


def unit_disk_counts(
    coefficients: np.ndarray,
    band: np.ndarray,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Batched root counts inside the unit circle.

    Rows may have negligible leading or trailing coefficients; each row
    is trimmed on its own and rows sharing a trimmed shape are solved
    together.

    Args:
        coefficients: Ascending coefficients, shape (N, d+1)
        band: Relative half-width of the circle band per row

    Returns:
        Tuple (counts, near-circle mask, converged mask, degenerate mask)
    """
    coefficients = np.asarray(coefficients, dtype=np.complex128)
    n_rows, width = coefficients.shape
    band = np.broadcast_to(np.asarray(band, dtype=float), (n_rows,))

    counts = np.zeros(n_rows, dtype=np.int64)
    near = np.zeros(n_rows, dtype=bool)
    converged = np.ones(n_rows, dtype=bool)

    magnitudes = np.abs(coefficients)
    row_max = magnitudes.max(axis=1)
    degenerate = row_max <= ZERO_THRESHOLD
    keep = magnitudes > ZERO_THRESHOLD * row_max[:, None]
    first = np.argmax(keep, axis=1)
    last = width - 1 - np.argmax(keep[:, ::-1], axis=1)

    shapes = np.stack([first, last], axis=1)
    for lo, hi in np.unique(shapes[~degenerate], axis=0):
        rows = np.flatnonzero((first == lo) & (last == hi) & ~degenerate)
        counts[rows] = lo
        if hi <= lo:
            continue
        roots, ok = aberth_batch(coefficients[rows, lo:hi + 1])
        moduli = np.abs(roots)
        counts[rows] += np.sum(moduli < 1.0, axis=1)
        near[rows] = np.any(np.abs(moduli - 1.0) <= band[rows, None], axis=1)
        converged[rows] = ok

    return counts, near, converged, degenerate


def batch_roots(coefficients: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Nonzero finite roots of many polynomials at once.

    Negligible leading coefficients (roots at infinity) and trailing
    ones (roots at zero) are trimmed per row; the freed slots are NaN.

    Args:
        coefficients: Ascending coefficients, shape (N, d+1)

    Returns:
        Tuple (roots of shape (N, d), converged mask, degenerate mask)
    """
    coefficients = np.asarray(coefficients, dtype=np.complex128)
    n_rows, width = coefficients.shape
    roots = np.full((n_rows, max(width - 1, 0)), np.nan, dtype=np.complex128)
    converged = np.ones(n_rows, dtype=bool)

    magnitudes = np.abs(coefficients)
    row_max = magnitudes.max(axis=1) if width else np.zeros(n_rows)
    degenerate = row_max <= ZERO_THRESHOLD
    keep = magnitudes > ZERO_THRESHOLD * row_max[:, None]
    first = np.argmax(keep, axis=1)
    last = width - 1 - np.argmax(keep[:, ::-1], axis=1)

    shapes = np.stack([first, last], axis=1)
    for lo, hi in np.unique(shapes[~degenerate], axis=0):
        if hi <= lo:
            continue
        rows = np.flatnonzero((first == lo) & (last == hi) & ~degenerate)
        found, ok = aberth_batch(coefficients[rows, lo:hi + 1])
        roots[rows, :hi - lo] = found
        converged[rows] = ok
    return roots, converged, degenerate
