"""
Zero-locus sampling by univariate slicing.

One coordinate is fixed to e^{x + iθ} and all roots of the remaining
univariate polynomial are collected. Both variable roles are swept by
the callers, so curve pieces that are nearly vertical in one role are
still sampled densely in the other.
"""

from typing import Optional, Tuple

import numpy as np

from algebra.evaluation import SliceBuilder, TWO_PI
from algebra.roots import batch_roots
from models.polynomial_model import LaurentPolynomial
from utils.exceptions import DimensionError
from utils.parallel import map_chunks


def slice_grid(lo: float, hi: float, modulus_steps: int, argument_steps: int) -> np.ndarray:
    """
    (log-modulus, argument) pairs of a slice sweep, shape (M·A, 2).

    Log-moduli are evenly spaced over [lo, hi]; arguments over [0, 2π).
    """
    xs = np.linspace(lo, hi, max(int(modulus_steps), 1))
    thetas = TWO_PI * np.arange(max(int(argument_steps), 1)) / max(int(argument_steps), 1)
    grid_x, grid_t = np.meshgrid(xs, thetas, indexing="ij")
    return np.column_stack([grid_x.ravel(), grid_t.ravel()])


def _zeros_chunk(
    params: np.ndarray,
    p: LaurentPolynomial,
    fixed_axis: int,
) -> Tuple[np.ndarray, np.ndarray, int]:
    free_axis = 1 - fixed_axis
    builder = SliceBuilder(p, free_axis)
    x = np.zeros((len(params), 2))
    x[:, fixed_axis] = params[:, 0]
    rows, degenerate = builder.build(x, params[:, 1:2])
    roots, converged, empty = batch_roots(rows)
    usable = ~degenerate & ~empty & converged

    fixed = np.exp(params[:, 0] + 1j * params[:, 1])
    mask = usable[:, None] & np.isfinite(roots) & (roots != 0)
    owner, slot = np.nonzero(mask)
    points = np.empty((len(owner), 2), dtype=np.complex128)
    points[:, fixed_axis] = fixed[owner]
    points[:, free_axis] = roots[owner, slot]
    return points, params[owner], int(np.sum(~usable))


def slice_zeros(
    p: LaurentPolynomial,
    fixed_axis: int,
    params: np.ndarray,
    n_jobs: Optional[int] = None,
) -> Tuple[np.ndarray, np.ndarray, int]:
    """
    Zeros of p on the slices z_fixed = e^{x + iθ}.

    Args:
        p: Plane polynomial
        fixed_axis: Coordinate held fixed, 0-based
        params: (x, θ) pairs, shape (M, 2)
        n_jobs: Worker count (config default)

    Returns:
        Tuple (points of shape (K, 2), producing (x, θ) per point, skipped slices)
    """
    if p.arity != 2:
        raise DimensionError("slice sampling needs two variables")
    params = np.asarray(params, dtype=float).reshape(-1, 2)
    if len(params) == 0:
        return np.empty((0, 2), dtype=np.complex128), np.empty((0, 2)), 0
    parts = map_chunks(_zeros_chunk, params, p, fixed_axis, n_jobs=n_jobs)
    points = np.concatenate([part[0] for part in parts])
    sources = np.concatenate([part[1] for part in parts])
    skipped = sum(part[2] for part in parts)
    return points, sources, skipped
