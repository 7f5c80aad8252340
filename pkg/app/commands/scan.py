"""Solidity scan over a random family."""

from models import FamilySpec, RunConfig
from corpus import passare_scan
from storage import FileManager
from utils import Config, ProcessingLogger, get_logger

logger = get_logger("amoeba.cli")


def run_scan(run: RunConfig, config: Config, files: FileManager) -> str:
    """
    Generate a family, check every member and write the scan report.

    ``--report`` (or ``--out``) receives the JSON report; a ``--table``
    path additionally receives the CSV view.
    """
    extra = run.extra
    spec = FamilySpec(
        arity=extra.get("arity", 2),
        degree=extra.get("degree", 6),
        support_rule=extra.get("rule", "random-hull"),
        phase=extra.get("phase", "real"),
        count=extra.get("count", 100),
        seed=run.seed,
    )
    with ProcessingLogger("scan", logger) as phase:
        report = passare_scan(
            spec,
            depth=run.depth,
            samples=run.samples,
            seed=run.seed,
            budget=config.cell_budget,
            n_jobs=run.threads,
            progress=extra.get("progress", True),
        )

    target = run.report or run.out or files.default_path("scan", "json")
    files.write_json(report.to_dict(), target)
    if extra.get("table") is not None:
        files.write_table(report.to_frame(), extra["table"])

    return (
        f"scan: {len(report.items)} polynomials, {len(report.candidates)} candidates, "
        f"{len(report.confirmed)} confirmed, {len(report.failures)} failed | scan {phase.elapsed:.2f}s"
    )
