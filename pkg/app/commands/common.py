"""Shared helpers for command handlers."""

from pathlib import Path
from typing import Dict

from algebra import component_count_bounds, is_maximally_sparse, newton_polytope
from amoeba import auto_domain
from corpus import fixture
from models import DomainBox, LaurentPolynomial, RunConfig
from parsers import parse_polynomial
from storage import FileManager
from utils.exceptions import DimensionError


def load_polynomial(run: RunConfig) -> LaurentPolynomial:
    """Polynomial from inline text, a file or a fixture name."""
    if run.fixture is not None:
        return fixture(run.fixture)
    if run.poly_file is not None:
        return parse_polynomial(run.poly_file.read_text(encoding="utf-8").strip())
    return parse_polynomial(run.poly_text)


def resolve_domain(run: RunConfig, p: LaurentPolynomial) -> DomainBox:
    """Explicit ``--domain`` or the automatic box around the tropical vertices."""
    if run.domain is None or run.domain == "auto":
        return auto_domain(p)
    domain = DomainBox.from_string(run.domain)
    if domain.dimension != p.arity:
        raise DimensionError(
            f"domain has {domain.dimension} axes but the polynomial has {p.arity} variables"
        )
    return domain


def output_path(run: RunConfig, files: FileManager, stem: str, suffix: str) -> Path:
    """``--out`` or a file in the configured output directory."""
    return run.out if run.out is not None else files.default_path(stem, suffix)


def image_format(run: RunConfig, default: str = "ppm") -> str:
    """Image format from ``--format``, then the ``--out`` suffix."""
    if run.output_format is not None and run.output_format.value != "json":
        return run.output_format.value
    if run.out is not None and run.out.suffix.lower() in (".ppm", ".svg"):
        return run.out.suffix.lower()[1:]
    return default


def timing_text(timings: Dict[str, float]) -> str:
    """``classification 1.20s, merge 0.03s`` style phase list."""
    return ", ".join(f"{name} {seconds:.2f}s" for name, seconds in timings.items())


def polytope_info(p: LaurentPolynomial) -> dict:
    """Polytope data printed by ``info``."""
    polytope = newton_polytope(p)
    low, high = component_count_bounds(p)
    info = {
        "polynomial": str(p),
        "arity": p.arity,
        "terms": len(p),
    }
    info.update(polytope.to_dict())
    info["bounds"] = [low, high]
    info["maximally_sparse"] = is_maximally_sparse(p)
    return info
