"""Tests for the Ronkin function, Ronkin coefficients and the spine."""

import math

import numpy as np
import pytest

from amoeba import (
    MembershipTester,
    dichotomous_components,
    ronkin_coefficient,
    ronkin_coefficients,
    ronkin_estimate,
    ronkin_value,
    spine,
    spine_polynomial,
    tropical_eval,
    tropical_hypersurface,
)
from models import AmoebaReport, ComplementComponent, DomainBox, MembershipStatus
from parsers import parse_polynomial
from utils.exceptions import DimensionError


def _component(order, representative, half_width=0.5):
    cell = DomainBox(tuple((c - half_width, c + half_width) for c in representative))
    return ComplementComponent(order=order, representative=representative, cells=[cell])


def _line_report(line):
    return AmoebaReport(
        polynomial=line,
        domain=DomainBox.cube(-5.0, 5.0, 2),
        algorithm="dichotomous",
        params={},
        components=[
            _component((0, 0), (-4.0, -4.0)),
            _component((1, 0), (4.0, 0.0)),
            _component((0, 1), (0.0, 4.0)),
        ],
    )


def test_monomial_is_exact():
    p = parse_polynomial("3*z1^2*z2")
    for x in [(0.0, 0.0), (1.5, -2.0), (-3.0, 0.25)]:
        expected = math.log(3) + 2 * x[0] + x[1]
        assert ronkin_value(p, x) == pytest.approx(expected, abs=1e-9)


def test_univariate_jensen():
    """N of z - 1 is max(x, 0)."""
    p = parse_polynomial("z1 - 1")
    for x in (-2.0, -0.5, 0.5, 2.0):
        assert ronkin_value(p, (x,)) == pytest.approx(max(x, 0.0), abs=1e-4)


def test_estimate_reports_convergence():
    p = parse_polynomial("z1 - 1")
    estimate = ronkin_estimate(p, (1.0,))
    assert estimate.converged
    assert estimate.nodes_per_axis >= 128
    assert len(estimate.history) >= 2
    assert estimate.value == estimate.history[-1]


def test_wrong_dimension(line):
    with pytest.raises(DimensionError):
        ronkin_estimate(line, (0.0,))


def test_convex_along_a_line(line):
    xs = np.linspace(-2.0, 2.0, 9)
    values = np.array([ronkin_value(line, (x, 0.3)) for x in xs])
    second = values[:-2] - 2 * values[1:-1] + values[2:]
    assert np.all(second >= -1e-3)


def test_coefficients_of_the_line(line):
    """Every complement component of z1 + z2 + 1 has coefficient 0."""
    for order, point in [((0, 0), (-10.0, -10.0)), ((1, 0), (10.0, 0.0)), ((0, 1), (0.0, 10.0))]:
        value, consistent = ronkin_coefficient(line, _component(order, point))
        assert value == pytest.approx(0.0, abs=1e-6)
        assert consistent


def test_coefficient_of_scaled_monomial():
    """Far from the amoeba the coefficient of a dominant term is ln|c|."""
    p = parse_polynomial("7*z1 + 1")
    value, _ = ronkin_coefficient(p, _component((1,), (8.0,)))
    assert value == pytest.approx(math.log(7), abs=1e-6)


def test_coefficients_by_order(line):
    coefficients = ronkin_coefficients(line, _line_report(line))
    assert set(coefficients) == {(0, 0), (1, 0), (0, 1)}
    assert all(abs(a) < 1e-6 for a in coefficients.values())


def test_spine_of_the_line(line):
    curve = spine(line, _line_report(line))
    assert len(curve.vertices) == 1
    assert curve.vertices[0] == pytest.approx((0.0, 0.0), abs=1e-3)
    assert len(curve.rays) == 3


def test_spine_polynomial_terms(line):
    t = spine_polynomial(line, _line_report(line))
    assert sorted(alpha for alpha, _ in t.terms) == [(0, 0), (0, 1), (1, 0)]
    assert t.inactive == ()


def test_spine_needs_two_components(line):
    report = _line_report(line)
    report.components = report.components[:1]
    assert spine(line, report).is_empty


def test_spine_needs_two_variables():
    p = parse_polynomial("z1 - 1")
    report = AmoebaReport(
        polynomial=p,
        domain=DomainBox.cube(-2.0, 2.0, 1),
        algorithm="dichotomous",
        params={},
    )
    with pytest.raises(DimensionError):
        spine(p, report)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["line", "p1", "p1_sparse", "p2", "p3"])
def test_spine_agrees_with_the_components(name, request):
    """Each representative picks its own order; the spine runs inside the amoeba."""
    p = request.getfixturevalue(name)
    report = dichotomous_components(p, max_depth=9 if name == "p2" else 8)
    t = spine_polynomial(p, report)
    for component in report.components:
        _, active = tropical_eval(t, component.representative)
        assert active == [component.order]

    samples = tropical_hypersurface(t).sample_points()
    samples = samples[[report.domain.contains(x) for x in samples]]
    assert len(samples) > 0
    batch = MembershipTester(p, samples=16).classify_many(samples)
    on_amoeba = batch.status != MembershipStatus.COMPLEMENT.code
    assert on_amoeba.mean() >= 0.95
