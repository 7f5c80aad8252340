"""
Data models for the amoeba toolkit.
"""

from models.polynomial_model import (
    LaurentPolynomial,
    Exponent,
    ComplexPoint,
    LogPoint,
    MAX_ARITY,
    VARIABLE_NAMES,
    graded_lex_key,
)
from models.geometry_model import NewtonPolytope, PointKind
from models.numeric_model import UnivariateSlice, RootSet, ZeroSample, RonkinEstimate
from models.amoeba_model import (
    OrderVector,
    MembershipStatus,
    PointClassification,
    ClassificationBatch,
    DomainBox,
    ComplementComponent,
    AmoebaReport,
    RasterImage,
)
from models.tropical_model import TropicalPolynomial, TropicalEdge, TropicalCurve
from models.corpus_model import SupportRule, PhaseLaw, FamilySpec, ScanItem, ScanReport
from models.run_model import Command, Algorithm, OutputFormat, RunConfig

__all__ = [
    "LaurentPolynomial",
    "Exponent",
    "ComplexPoint",
    "LogPoint",
    "MAX_ARITY",
    "VARIABLE_NAMES",
    "graded_lex_key",
    "NewtonPolytope",
    "PointKind",
    "UnivariateSlice",
    "RootSet",
    "ZeroSample",
    "RonkinEstimate",
    "OrderVector",
    "MembershipStatus",
    "PointClassification",
    "ClassificationBatch",
    "DomainBox",
    "ComplementComponent",
    "AmoebaReport",
    "RasterImage",
    "TropicalPolynomial",
    "TropicalEdge",
    "TropicalCurve",
    "SupportRule",
    "PhaseLaw",
    "FamilySpec",
    "ScanItem",
    "ScanReport",
    "Command",
    "Algorithm",
    "OutputFormat",
    "RunConfig",
]
