"""Commands about the polynomial and its complement components."""

import json

from amoeba import (
    classify_point,
    dichotomous_components,
    harnack_region_test,
    lopsided_at,
    render_report,
    spine,
)
from models import AmoebaReport, RunConfig
from storage import FileManager
from utils import Config, get_logger
from utils.exceptions import DimensionError, NonRealCoefficientsError

from .common import (
    image_format,
    load_polynomial,
    output_path,
    polytope_info,
    resolve_domain,
    timing_text,
)

logger = get_logger("amoeba.cli")


def run_info(run: RunConfig, config: Config, files: FileManager) -> str:
    """Newton polytope summary as JSON."""
    p = load_polynomial(run)
    return json.dumps(polytope_info(p), indent=2)


def run_member(run: RunConfig, config: Config, files: FileManager) -> str:
    """Classify one log point and report the cheap certificates alongside."""
    p = load_polynomial(run)
    x = run.point
    if len(x) != p.arity:
        raise DimensionError(f"point has {len(x)} coordinates but the polynomial has {p.arity} variables")

    result = classify_point(p, x, samples=run.samples, seed=run.seed)
    dominant = lopsided_at(p, x)
    try:
        harnack = harnack_region_test(p, x)
    except (DimensionError, NonRealCoefficientsError):
        harnack = None

    output = {
        "point": list(x),
        **result.to_dict(),
        "lopsided_term": list(dominant) if dominant is not None else None,
        "harnack_value": harnack,
        "harnack_in_amoeba": None if harnack is None else harnack <= 0,
    }
    return json.dumps(output, indent=2)


def _components(run: RunConfig, config: Config) -> AmoebaReport:
    p = load_polynomial(run)
    domain = resolve_domain(run, p)
    report = dichotomous_components(
        p,
        domain,
        max_depth=run.depth,
        samples=run.samples,
        seed=run.seed,
        budget=config.cell_budget,
        n_jobs=run.threads,
    )
    return report


def run_components(run: RunConfig, config: Config, files: FileManager) -> str:
    """Dichotomous component report, written as JSON."""
    report = _components(run, config)
    target = run.report or (run.out if run.out is not None else files.default_path("components", "json"))
    files.emit_report(report, target)
    for warning in report.warnings:
        logger.warning(warning)
    return f"{report.summary()} | {timing_text(report.timings)}"


def run_spine(run: RunConfig, config: Config, files: FileManager) -> str:
    """
    Spine from a fresh component report.

    The curve is written as JSON to ``--report``; ``--out`` receives the
    component picture with the spine drawn over it (SVG unless
    ``--format ppm`` is given).
    """
    report = _components(run, config)
    p = report.polynomial
    curve = spine(p, report)

    if run.report is not None:
        files.write_json(
            {"components": report.component_count, "spine": curve.to_dict()},
            run.report,
        )
    if run.out is not None or run.report is None:
        image = render_report(report, run.resolution)
        fmt = image_format(run, default="svg")
        files.write_image(image, output_path(run, files, "spine", fmt), fmt, curve=curve)

    return (
        f"spine: {len(curve.vertices)} vertices, {len(curve.edges)} edges "
        f"from {report.component_count} components | {timing_text(report.timings)}"
    )
