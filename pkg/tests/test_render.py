"""Tests for amoeba pictures."""

import numpy as np
import pytest

from amoeba import (
    auto_domain,
    greedy_render,
    naive_render,
    palette,
    pixel_membership_render,
    render,
    render_points,
    render_report,
)
from amoeba.render import AMOEBA_COLOR, BACKGROUND, REPORT_AMOEBA, REPORT_BACKGROUND
from models import AmoebaReport, ComplementComponent, DomainBox
from parsers import parse_polynomial
from utils.exceptions import DimensionError

SQUARE = DomainBox.cube(-2.0, 2.0, 2)


def test_auto_domain_of_the_line(line):
    assert auto_domain(line).intervals == ((-2.0, 2.0), (-2.0, 2.0))
    assert auto_domain(line, padding=1.0).intervals == ((-1.0, 1.0), (-1.0, 1.0))


def test_auto_domain_follows_the_vertex():
    p = parse_polynomial("z1 + z2 + 1000")
    (x0, x1), (y0, y1) = auto_domain(p).intervals
    assert (x0 + x1) / 2 == pytest.approx(np.log(1000))
    assert (y0 + y1) / 2 == pytest.approx(np.log(1000))


def test_auto_domain_without_vertices():
    assert auto_domain(parse_polynomial("3*z1^2*z2")).intervals == ((-5.0, 5.0), (-5.0, 5.0))
    collinear = auto_domain(parse_polynomial("z1 + 1", arity=2))
    assert collinear.intervals == ((-2.0, 2.0), (-2.0, 2.0))


def test_naive_render_of_a_monomial_is_empty():
    p = parse_polynomial("3*z1^2*z2")
    image, plotted = naive_render(p, SQUARE, grid=20, size=32)
    assert plotted == 0
    assert np.all(image.pixels == BACKGROUND)


def test_naive_render_plots_the_line(line):
    image, plotted = naive_render(line, SQUARE, grid=40, size=64)
    assert plotted > 0
    assert image.stats["plotted"] == plotted
    assert np.any(np.all(image.pixels == AMOEBA_COLOR, axis=-1))


def test_greedy_matches_the_pixel_grid(line):
    full = pixel_membership_render(line, SQUARE, size=40, seed=3)
    greedy = greedy_render(line, SQUARE, size=40, seed=3)
    assert np.array_equal(full.pixels, greedy.pixels)
    assert greedy.stats["tested_fraction"] < 1.0
    assert greedy.stats["warnings"] == []


def test_grid_render_paints_the_origin(line):
    image = pixel_membership_render(line, SQUARE, size=(41, 41))
    assert tuple(image.pixels[20, 20]) == AMOEBA_COLOR
    assert tuple(image.pixels[40, 0]) == BACKGROUND


def test_render_dispatch(line):
    image = render(line, "archimedean", SQUARE, size=32)
    assert image.stats["algorithm"] == "archimedean"
    with pytest.raises(ValueError):
        render(line, "dichotomous", SQUARE, size=32)


def test_renderers_need_two_variables():
    with pytest.raises(DimensionError):
        render(parse_polynomial("z1 - 1"), "grid", DomainBox.cube(-1.0, 1.0, 1), size=8)


def test_palette_is_deterministic():
    assert palette((1, 0)) == palette((1, 0))
    assert palette((1, 0)) != palette((0, 1))
    assert all(64 <= c < 240 for c in palette((3, 2)))


def test_render_points_counts_inside():
    points = np.array([[0.0, 0.0], [1.9, -1.9], [3.0, 0.0], [np.nan, 0.0]])
    image, inside = render_points(points, SQUARE, size=4)
    assert inside == 2
    assert tuple(image.pixels[2, 2]) == AMOEBA_COLOR
    assert tuple(image.pixels[3, 3]) == AMOEBA_COLOR


def test_points_on_the_box_edges_are_plotted():
    """The domain box is closed: every edge and corner maps to an edge pixel."""
    points = np.array([[-2.0, -2.0], [2.0, 2.0], [-2.0, 2.0], [2.0, -2.0], [0.0, -2.0]])
    image, inside = render_points(points, SQUARE, size=4)
    assert inside == 5
    rows, cols, mask = image.point_to_pixel(points)
    assert mask.all()
    assert list(zip(rows, cols)) == [(3, 0), (0, 3), (0, 0), (3, 3), (3, 2)]


def test_render_report_paints_cells(line):
    left = DomainBox(((-2.0, 0.0), (-2.0, 2.0)))
    report = AmoebaReport(
        polynomial=line,
        domain=SQUARE,
        algorithm="dichotomous",
        params={},
        components=[ComplementComponent(order=(0, 0), representative=(-1.0, 0.0), cells=[left])],
        amoeba_boxes=[DomainBox(((0.0, 1.0), (0.0, 1.0)))],
    )
    image = render_report(report, 4)
    assert tuple(image.pixels[0, 0]) == palette((0, 0))
    assert tuple(image.pixels[3, 1]) == palette((0, 0))
    assert tuple(image.pixels[1, 2]) == REPORT_AMOEBA
    assert tuple(image.pixels[3, 3]) == REPORT_BACKGROUND
    assert image.stats["components"] == 1


def _isolated_fraction(image):
    """Share of plotted pixels with no plotted 8-neighbour."""
    plotted = ~np.all(image.pixels == BACKGROUND, axis=2)
    padded = np.pad(plotted, 1)
    height, width = plotted.shape
    company = np.zeros_like(plotted)
    for dr in (0, 1, 2):
        for dc in (0, 1, 2):
            if (dr, dc) != (1, 1):
                company |= padded[dr:dr + height, dc:dc + width]
    return float((plotted & ~company).sum()) / max(int(plotted.sum()), 1)


@pytest.mark.slow
def test_denser_naive_sampling_fills_the_picture(p3):
    domain = auto_domain(p3)
    coarse, _ = naive_render(p3, domain, grid=100, size=400)
    fine, _ = naive_render(p3, domain, grid=500, size=400)
    assert _isolated_fraction(fine) < 0.005
    assert _isolated_fraction(fine) < _isolated_fraction(coarse)
