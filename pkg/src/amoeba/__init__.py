"""
Amoeba computations: membership, pictures, components, tropical
geometry and zero-locus maps.
"""

from amoeba.membership import (
    MembershipTester,
    classify_point,
    classify_points,
    point_order,
    lopsided_at,
    lopsided_many,
    harnack_values,
    harnack_region_test,
)
from amoeba.tropical import (
    tropical_add,
    tropical_mul,
    tropical_eval,
    tropical_vertices,
    tropical_hypersurface,
    archimedean_tropicalization,
    inactive_terms,
)
from amoeba.ronkin import (
    ronkin_estimate,
    ronkin_value,
    ronkin_coefficient,
    ronkin_coefficients,
    spine_polynomial,
    spine,
)
from amoeba.render import (
    auto_domain,
    naive_render,
    pixel_membership_render,
    greedy_render,
    archimedean_render,
    render_report,
    render_points,
    render,
    palette,
)
from amoeba.dichotomy import DichotomousClassifier, dichotomous_components, component_diameter
from amoeba.maps import (
    sample_zero_locus,
    coamoeba_points,
    coamoeba_raster,
    moment_map,
    moment_map_many,
    compactified_amoeba,
    compactified_raster,
    contour_points,
)

__all__ = [
    "MembershipTester",
    "classify_point",
    "classify_points",
    "point_order",
    "lopsided_at",
    "lopsided_many",
    "harnack_values",
    "harnack_region_test",
    "tropical_add",
    "tropical_mul",
    "tropical_eval",
    "tropical_vertices",
    "tropical_hypersurface",
    "archimedean_tropicalization",
    "inactive_terms",
    "ronkin_estimate",
    "ronkin_value",
    "ronkin_coefficient",
    "ronkin_coefficients",
    "spine_polynomial",
    "spine",
    "auto_domain",
    "naive_render",
    "pixel_membership_render",
    "greedy_render",
    "archimedean_render",
    "render_report",
    "render_points",
    "render",
    "palette",
    "DichotomousClassifier",
    "dichotomous_components",
    "component_diameter",
    "sample_zero_locus",
    "coamoeba_points",
    "coamoeba_raster",
    "moment_map",
    "moment_map_many",
    "compactified_amoeba",
    "compactified_raster",
    "contour_points",
]
