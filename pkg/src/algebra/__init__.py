"""
Polynomial algebra: evaluation, slicing, roots and Newton polytopes.
"""

from algebra.evaluation import (
    evaluate,
    evaluate_many,
    term_magnitudes,
    partial_logarithmic_derivative,
    restrict_to_variable,
    log_point,
    arg_point,
    torus_point,
    wrap_angle,
    pairing,
    SliceBuilder,
)
from algebra.roots import (
    all_roots,
    aberth_batch,
    count_roots_in_disk,
    unit_disk_counts,
    root_multiplicities,
    batch_roots,
)
from algebra.newton import (
    convex_hull_2d,
    newton_polytope,
    polytope_of_points,
    lattice_points,
    component_count_bounds,
    is_maximally_sparse,
    classify_lattice_point,
    upper_facets,
)

__all__ = [
    "evaluate",
    "evaluate_many",
    "term_magnitudes",
    "partial_logarithmic_derivative",
    "restrict_to_variable",
    "log_point",
    "arg_point",
    "torus_point",
    "wrap_angle",
    "pairing",
    "SliceBuilder",
    "all_roots",
    "aberth_batch",
    "count_roots_in_disk",
    "unit_disk_counts",
    "root_multiplicities",
    "batch_roots",
    "convex_hull_2d",
    "newton_polytope",
    "polytope_of_points",
    "lattice_points",
    "component_count_bounds",
    "is_maximally_sparse",
    "classify_lattice_point",
    "upper_facets",
]
