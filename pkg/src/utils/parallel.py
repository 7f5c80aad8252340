"""
Chunked worker pool.

Work is cut into fixed-size chunks whose boundaries do not depend on
the number of workers, and results are re-assembled in chunk order, so
output is identical for any ``n_jobs``.
"""

from typing import Callable, List, Optional, Sequence, TypeVar

import numpy as np
from joblib import Parallel, delayed

from utils.config import Config

T = TypeVar("T")
R = TypeVar("R")


def chunk_bounds(total: int, chunk_size: int) -> List[tuple]:
    """Half-open ``(start, stop)`` pairs covering ``range(total)``."""
    chunk_size = max(1, int(chunk_size))
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def map_chunks(
    func: Callable[..., R],
    rows: np.ndarray,
    *args,
    n_jobs: Optional[int] = None,
    chunk_size: Optional[int] = None,
) -> List[R]:
    """
    Apply ``func(rows[start:stop], *args)`` to every chunk.

    Args:
        func: Picklable function taking a row block first
        rows: Array whose first axis is split
        n_jobs: Worker count (config default when omitted)
        chunk_size: Rows per chunk (config default when omitted)

    Returns:
        Per-chunk results in chunk order
    """
    config = Config()
    n_jobs = config.threads if n_jobs is None else n_jobs
    chunk_size = config.chunk_size if chunk_size is None else chunk_size

    bounds = chunk_bounds(len(rows), chunk_size)
    if not bounds:
        return []

    if n_jobs <= 1 or len(bounds) == 1:
        return [func(rows[start:stop], *args) for start, stop in bounds]

    return Parallel(n_jobs=n_jobs)(
        delayed(func)(rows[start:stop], *args) for start, stop in bounds
    )


def map_items(
    func: Callable[..., R],
    items: Sequence[T],
    *args,
    n_jobs: Optional[int] = None,
) -> List[R]:
    """Apply ``func(item, *args)`` to independent items, preserving order."""
    n_jobs = Config().threads if n_jobs is None else n_jobs
    if n_jobs <= 1 or len(items) <= 1:
        return [func(item, *args) for item in items]
    return Parallel(n_jobs=n_jobs)(delayed(func)(item, *args) for item in items)
