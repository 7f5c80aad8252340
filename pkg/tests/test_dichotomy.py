"""Tests for component detection by adaptive subdivision."""

import numpy as np
import pytest

from algebra import newton_polytope, polytope_of_points
from amoeba import (
    MembershipTester,
    auto_domain,
    component_diameter,
    dichotomous_components,
    render_report,
    spine,
)
from corpus import simplex_points
from models import ComplementComponent, DomainBox, LaurentPolynomial, MembershipStatus
from parsers import parse_polynomial
from utils.exceptions import BudgetExceeded, DimensionError

LINE_DOMAIN = DomainBox.cube(-4.0, 4.0, 2)
RANDOM_CASES = 50
SEGMENT_SAMPLES = 16


def _cell(x, y, half=0.25):
    return DomainBox(((x - half, x + half), (y - half, y + half)))


def test_diameter_of_one_cell():
    component = ComplementComponent(order=(0, 0), representative=(0.0, 0.0), cells=[_cell(0, 0)])
    assert component_diameter(component) == 0.0


def test_diameter_of_two_cells():
    component = ComplementComponent(
        order=(0, 0), representative=(0.0, 0.0), cells=[_cell(0, 0), _cell(1, 0)]
    )
    assert component_diameter(component) == pytest.approx(1.0)


def test_diameter_is_the_farthest_pair():
    cells = [_cell(x, y) for x in range(4) for y in range(3)]
    component = ComplementComponent(order=(0, 0), representative=(0.0, 0.0), cells=cells)
    assert component_diameter(component) == pytest.approx((3 ** 2 + 2 ** 2) ** 0.5)


def test_line_components(line):
    report = dichotomous_components(line, LINE_DOMAIN, max_depth=8, samples=8, seed=0)
    assert sorted(report.orders) == [(0, 0), (0, 1), (1, 0)]
    assert report.bounded_components == []
    assert report.solid
    assert report.optimal
    assert report.bounds == (3, 3)
    assert report.cell_size == pytest.approx(8.0 / 2 ** 8)


def test_line_spine_vertex(line):
    report = dichotomous_components(line, LINE_DOMAIN, max_depth=8, samples=8, seed=0)
    curve = spine(line, report)
    assert len(curve.vertices) == 1
    x, y = curve.vertices[0]
    assert (x ** 2 + y ** 2) ** 0.5 < 0.05


def test_components_are_deterministic_across_workers(line):
    one = dichotomous_components(line, LINE_DOMAIN, max_depth=6, seed=4, n_jobs=1)
    four = dichotomous_components(line, LINE_DOMAIN, max_depth=6, seed=4, n_jobs=4)
    assert one.to_dict() == four.to_dict()
    assert render_report(one, 64).pixels.tobytes() == render_report(four, 64).pixels.tobytes()


def test_univariate_components():
    """z² - 2.5z + 1 has zeros of modulus 2 and 1/2: three intervals."""
    p = parse_polynomial("z1^2 - 2.5*z1 + 1")
    report = dichotomous_components(p, DomainBox.cube(-3.0, 3.0, 1), max_depth=8)
    assert report.orders == [(0,), (1,), (2,)]
    middle = report.component_for((1,))
    assert middle.bounded
    assert middle.in_support
    assert -0.7 < middle.representative[0] < 0.7


def test_report_serialization(line):
    report = dichotomous_components(line, LINE_DOMAIN, max_depth=5)
    data = report.to_dict()
    assert list(data) == [
        "polynomial", "domain", "algorithm", "params", "components", "counts",
        "bounds", "flags", "warnings", "unsupported_bounded_orders", "small_components",
    ]
    assert data["params"]["max_depth"] == 5
    assert data["counts"]["components"] == 3
    assert data["flags"] == {"solid": True, "optimal": True}


def test_budget_exceeded(line):
    with pytest.raises(BudgetExceeded):
        dichotomous_components(line, LINE_DOMAIN, max_depth=8, budget=50)


def test_domain_dimension_mismatch(line):
    with pytest.raises(DimensionError):
        dichotomous_components(line, DomainBox.cube(-1.0, 1.0, 3), max_depth=4)


def test_depth_out_of_range(line):
    with pytest.raises(ValueError):
        dichotomous_components(line, LINE_DOMAIN, max_depth=15)


@pytest.mark.slow
def test_sparse_fixture_is_solid(p1_sparse):
    report = dichotomous_components(p1_sparse, max_depth=8)
    assert report.component_count == 8
    assert report.bounded_components == []
    assert report.solid


@pytest.mark.slow
def test_bounded_holes(p2):
    report = dichotomous_components(p2, max_depth=9)
    assert report.component_count == 7
    bounded = sorted(c.order for c in report.bounded_components)
    assert len(bounded) == 3
    assert (1, 3) in bounded
    assert (3, 3) in bounded
    assert len(report.unsupported_bounded_orders) == 1
    unsupported = report.unsupported_bounded_orders[0]
    assert unsupported in newton_polytope(p2).interior_points
    assert report.to_dict()["unsupported_bounded_orders"] == [list(unsupported)]


@pytest.mark.slow
def test_bounded_hole_diameter_is_stable(p2):
    coarse = dichotomous_components(p2, max_depth=8).component_for((1, 3))
    fine = dichotomous_components(p2, max_depth=9).component_for((1, 3))
    assert coarse.diameter_lb > 0
    assert fine.diameter_lb == pytest.approx(coarse.diameter_lb, rel=0.1)


@pytest.mark.slow
def test_optimal_fixture(p3):
    expected = newton_polytope(p3).lattice_count
    fine = dichotomous_components(p3, max_depth=9)
    assert fine.component_count == expected
    assert fine.optimal
    coarse = dichotomous_components(p3, max_depth=5)
    assert coarse.component_count == fine.component_count


def _random_plane_polynomial(rng):
    """4 to 8 random monomials of degree at most 6 with a two dimensional hull."""
    while True:
        pool = simplex_points(2, int(rng.integers(2, 7)))
        count = min(int(rng.integers(4, 9)), len(pool))
        support = [pool[i] for i in rng.choice(len(pool), size=count, replace=False)]
        if polytope_of_points(support).affine_dimension < 2:
            continue
        magnitudes = np.exp(rng.uniform(np.log(0.1), np.log(100.0), size=count))
        phases = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, size=count))
        return LaurentPolynomial.from_terms(list(zip(support, magnitudes * phases)), arity=2)


@pytest.mark.slow
def test_component_orders_are_distinct_lattice_points_within_the_bounds():
    """Between #vertices and #lattice points, one component per order."""
    rng = np.random.default_rng(2024)
    for _ in range(RANDOM_CASES):
        p = _random_plane_polynomial(rng)
        polytope = newton_polytope(p)
        report = dichotomous_components(p, auto_domain(p), max_depth=7)
        orders = report.orders
        assert polytope.vertex_count <= report.component_count <= polytope.lattice_count, str(p)
        assert len(set(orders)) == len(orders)
        assert set(orders) <= set(polytope.lattice_points)


@pytest.mark.parametrize("name", ["line", "p1_sparse"])
def test_segments_between_component_cells_avoid_the_amoeba(name, request):
    """Complement components are convex: no segment point is certified amoeba."""
    p = request.getfixturevalue(name)
    domain = LINE_DOMAIN if name == "line" else auto_domain(p)
    report = dichotomous_components(p, domain, max_depth=6)
    rng = np.random.default_rng(5)
    t = np.arange(1, SEGMENT_SAMPLES + 1) / (SEGMENT_SAMPLES + 1)
    segments = []
    for component in report.components:
        centres = np.array([box.center for box in component.cells])
        for _ in range(8):
            a, b = centres[rng.integers(len(centres), size=2)]
            segments.append(a + t[:, None] * (b - a))
    batch = MembershipTester(p).classify_many(np.concatenate(segments))
    assert not np.any(batch.status == MembershipStatus.AMOEBA.code)
