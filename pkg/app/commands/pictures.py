"""Commands that produce pictures."""

from amoeba import (
    archimedean_tropicalization,
    coamoeba_points,
    coamoeba_raster,
    compactified_amoeba,
    compactified_raster,
    contour_points,
    dichotomous_components,
    render,
    render_points,
    render_report,
    sample_zero_locus,
    tropical_hypersurface,
)
from models import Algorithm, RunConfig
from storage import FileManager
from utils import Config, ProcessingLogger, get_logger

from .common import image_format, load_polynomial, output_path, resolve_domain, timing_text

logger = get_logger("amoeba.cli")


def run_draw(run: RunConfig, config: Config, files: FileManager) -> str:
    """Amoeba picture with the chosen algorithm (greedy by default)."""
    p = load_polynomial(run)
    domain = resolve_domain(run, p)
    algorithm = run.algorithm or Algorithm.GREEDY
    fmt = image_format(run)

    timings = {}
    if algorithm is Algorithm.DICHOTOMOUS:
        report = dichotomous_components(
            p,
            domain,
            max_depth=run.depth,
            samples=run.samples,
            seed=run.seed,
            budget=config.cell_budget,
            n_jobs=run.threads,
        )
        timings.update(report.timings)
        with ProcessingLogger("render", logger) as phase:
            image = render_report(report, run.resolution)
        if run.report is not None:
            files.emit_report(report, run.report)
        detail = report.summary()
    else:
        with ProcessingLogger(f"{algorithm.value} render", logger) as phase:
            image = render(
                p,
                algorithm.value,
                domain,
                size=run.resolution,
                samples=run.samples,
                grid=run.grid,
                seed=run.seed,
                n_jobs=run.threads,
            )
        if run.report is not None:
            stats = {k: v for k, v in image.stats.items() if k != "seconds"}
            files.write_json({"algorithm": algorithm.value, "params": run.params(), "stats": stats}, run.report)
        detail = ", ".join(f"{k}={v}" for k, v in image.stats.items() if k not in ("seconds", "warnings"))
    timings["render"] = phase.elapsed

    curve = tropical_hypersurface(archimedean_tropicalization(p)) if fmt == "svg" else None
    files.write_image(image, output_path(run, files, "amoeba", fmt), fmt, curve=curve)
    return f"draw ({algorithm.value}): {detail} | {timing_text(timings)}"


def run_coamoeba(run: RunConfig, config: Config, files: FileManager) -> str:
    """Arguments of sampled zeros on the torus square."""
    p = load_polynomial(run)
    domain = resolve_domain(run, p)
    with ProcessingLogger("coamoeba", logger) as phase:
        sample = sample_zero_locus(p, domain, density=run.grid, n_jobs=run.threads)
        points = coamoeba_points(sample)
        image = coamoeba_raster(points, run.resolution)
    files.write_image(image, output_path(run, files, "coamoeba", "ppm"), "ppm")
    if run.report is not None:
        files.write_points(points, run.report)
    return f"coamoeba: {len(points)} points, {sample.skipped} skipped | render {phase.elapsed:.2f}s"


def run_compactified(run: RunConfig, config: Config, files: FileManager) -> str:
    """Moment-map image of sampled zeros inside the Newton polygon."""
    p = load_polynomial(run)
    domain = resolve_domain(run, p)
    with ProcessingLogger("compactified amoeba", logger) as phase:
        sample = sample_zero_locus(p, domain, density=run.grid, n_jobs=run.threads)
        points, outline = compactified_amoeba(p, sample)
        image = compactified_raster(points, outline, run.resolution)
    files.write_image(image, output_path(run, files, "compactified", "ppm"), "ppm")
    if run.report is not None:
        files.write_points(points, run.report)
    return f"compactified: {len(points)} points, {len(outline) - 1} polygon vertices | render {phase.elapsed:.2f}s"


def run_contour(run: RunConfig, config: Config, files: FileManager) -> str:
    """Contour of the amoeba (critical values of Log on the zero locus)."""
    p = load_polynomial(run)
    domain = resolve_domain(run, p)
    with ProcessingLogger("contour", logger) as phase:
        points = contour_points(p, domain, density=run.grid)
        image, plotted = render_points(points, domain, run.resolution)
    files.write_image(image, output_path(run, files, "contour", "ppm"), "ppm")
    if run.report is not None:
        files.write_points(points, run.report)
    return f"contour: {len(points)} points, {plotted} inside the domain | render {phase.elapsed:.2f}s"
