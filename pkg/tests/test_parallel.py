"""Tests for the chunked worker pool and worker-count independence."""

import numpy as np
import pytest

from amoeba import auto_domain, dichotomous_components, pixel_membership_render, render_report
from corpus import passare_scan
from models import DomainBox, FamilySpec
from storage import FileManager
from utils.parallel import chunk_bounds, map_chunks

WORKERS = (1, 4, 8)
SMALL_CHUNK = 64
LINE_DOMAIN = DomainBox.cube(-4.0, 4.0, 2)


def test_chunk_bounds_cover_the_range():
    assert chunk_bounds(10, 4) == [(0, 4), (4, 8), (8, 10)]
    assert chunk_bounds(0, 4) == []
    assert chunk_bounds(3, 0) == [(0, 1), (1, 2), (2, 3)]


def test_chunk_results_come_back_in_order(env):
    env(chunk_size=SMALL_CHUNK)
    points = np.random.default_rng(2).normal(size=(1000, 3))
    serial = np.concatenate(map_chunks(np.sort, points, n_jobs=1))
    pooled = np.concatenate(map_chunks(np.sort, points, n_jobs=4))
    assert len(chunk_bounds(len(points), SMALL_CHUNK)) > 8
    assert np.array_equal(serial, pooled)


def _artifacts(p, domain, depth, n_jobs, folder):
    """Report JSON and raster PPM bytes for one worker count."""
    files = FileManager()
    report = dichotomous_components(p, domain, max_depth=depth, samples=8, seed=3, n_jobs=n_jobs)
    raster = pixel_membership_render(p, domain, size=48, samples=8, seed=3, n_jobs=n_jobs)
    report_path = files.emit_report(report, folder / f"report-{n_jobs}.json")
    cells_path = files.write_ppm(render_report(report, 64), folder / f"cells-{n_jobs}.ppm")
    raster_path = files.write_ppm(raster, folder / f"raster-{n_jobs}.ppm")
    return report_path.read_bytes(), cells_path.read_bytes(), raster_path.read_bytes()


@pytest.mark.parametrize("name", ["line", "p1_sparse"])
def test_artifacts_are_identical_for_any_worker_count(name, request, env, tmp_path):
    """Small chunks force the pooled path; every file must match byte for byte."""
    env(chunk_size=SMALL_CHUNK)
    p = request.getfixturevalue(name)
    domain = LINE_DOMAIN if name == "line" else auto_domain(p)
    depth = 7 if name == "line" else 6
    baseline = _artifacts(p, domain, depth, WORKERS[0], tmp_path)
    for n_jobs in WORKERS[1:]:
        assert _artifacts(p, domain, depth, n_jobs, tmp_path) == baseline


def test_scan_is_identical_for_any_worker_count():
    spec = FamilySpec(degree=3, support_rule="vertices-only", count=4, seed=11)
    serial = passare_scan(spec, depth=4, samples=8, seed=0, n_jobs=1, progress=False)
    pooled = passare_scan(spec, depth=4, samples=8, seed=0, n_jobs=2, progress=False)
    assert serial.to_dict() == pooled.to_dict()
