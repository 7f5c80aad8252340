"""Tests for lopsidedness, orders and point classification."""

import math

import numpy as np
import pytest

from amoeba import (
    MembershipTester,
    auto_domain,
    classify_point,
    classify_points,
    harnack_region_test,
    harnack_values,
    lopsided_at,
    lopsided_many,
    point_order,
)
from corpus import random_polynomial
from models import FamilySpec, MembershipStatus
from parsers import parse_polynomial
from utils.exceptions import DivergentOrderError, NonRealCoefficientsError


def test_lopsided_far_out(line):
    assert lopsided_at(line, (10, 0)) == (1, 0)


def test_no_certificate_at_the_vertex(line):
    assert lopsided_at(line, (0, 0)) is None


def test_lopsided_p2(p2):
    assert lopsided_at(p2, (40, 0)) == (4, 3)


def test_univariate_orders():
    p = parse_polynomial("z1 - 1")
    assert point_order(p, (1.0,)) == (1,)
    assert point_order(p, (-1.0,)) == (0,)


def test_univariate_amoeba_points():
    """z1² - 2.5z1 + 1 has its amoeba at ±ln 2."""
    p = parse_polynomial("z1^2 - 2.5z1 + 1")
    assert point_order(p, (-2.0,)) == (0,)
    assert point_order(p, (0.0,)) == (1,)
    assert point_order(p, (2.0,)) == (2,)
    for x in (math.log(2), -math.log(2)):
        assert classify_point(p, (x,)).status is MembershipStatus.AMOEBA


def test_deep_constant_component(line):
    assert point_order(line, (-10, -10)) == (0, 0)


def test_line_vertex_is_in_the_amoeba(line):
    result = classify_point(line, (0, 0), samples=8)
    assert result.status is MembershipStatus.AMOEBA
    assert result.order is None


def test_line_lopsided_point(line):
    result = classify_point(line, (10, 0))
    assert result.status is MembershipStatus.COMPLEMENT
    assert result.order == (1, 0)
    assert result.lopsided


def test_orders_without_lopsided_shortcut(line):
    """Fiber counting agrees with the dominant term where both apply."""
    for x, order in (((3, -1), (1, 0)), ((-1, 3), (0, 1)), ((-3, -3), (0, 0))):
        result = classify_point(line, x, certify_lopsided=False)
        assert result.status is MembershipStatus.COMPLEMENT
        assert result.order == order
        assert not result.lopsided


def test_point_order_raises_inside_the_amoeba(line):
    with pytest.raises(DivergentOrderError) as info:
        point_order(line, (0, 0))
    assert info.value.reason in DivergentOrderError.REASONS


def test_bounded_component_order():
    """Fiber counts find the interior order of a dominant middle term."""
    p = parse_polynomial("1 + z1^3 + z2^3 + 20*z1*z2")
    assert lopsided_at(p, (0, 0)) == (1, 1)
    result = classify_point(p, (0.0, 0.0), certify_lopsided=False)
    assert result.status is MembershipStatus.COMPLEMENT
    assert result.order == (1, 1)


def test_classify_points_matches_single_calls(p2):
    rng = np.random.default_rng(5)
    points = rng.uniform(-3, 3, size=(40, 2))
    batch = classify_points(p2, points, samples=4, seed=1)
    for i in (0, 7, 19, 39):
        single = classify_point(p2, points[i], samples=4, seed=1)
        assert batch.at(i).status is single.status
        assert batch.at(i).order == single.order


def test_classification_is_independent_of_workers(p2):
    rng = np.random.default_rng(9)
    points = rng.uniform(-3, 3, size=(300, 2))
    tester = MembershipTester(p2, samples=4, seed=2)
    one = tester.classify_many(points, n_jobs=1)
    many = tester.classify_many(points, n_jobs=4)
    assert np.array_equal(one.status, many.status)
    assert np.array_equal(one.orders, many.orders)


def test_lopsided_points_are_never_amoeba():
    """A dominating term rules out the amoeba whatever the fibers say."""
    spec = FamilySpec(arity=2, degree=4, support_rule="full-simplex", phase="uniform", count=20, seed=11)
    rng = np.random.default_rng(11)
    for index in range(spec.count):
        p = random_polynomial(spec, index)
        points = rng.uniform(-4, 4, size=(1000, 2))
        certified, _ = lopsided_many(p, points)
        batch = classify_points(p, points[certified], samples=4, certify_lopsided=False)
        assert not np.any(batch.status == MembershipStatus.AMOEBA.code)


def test_harnack_signs(line):
    assert harnack_region_test(line, (0, 0)) == pytest.approx(-3)
    assert harnack_region_test(line, (10, 0)) > 0
    assert harnack_region_test(line, (0, math.log(2))) == pytest.approx(0, abs=1e-9)


def test_harnack_needs_real_coefficients():
    with pytest.raises(NonRealCoefficientsError):
        harnack_region_test(parse_polynomial("z1 + i*z2 + 1"), (0, 0))


def test_harnack_agrees_with_membership(line):
    """Sign test and fiber test agree away from the boundary band."""
    axis = np.linspace(-3, 3, 100)
    grid = np.stack(np.meshgrid(axis, axis), axis=-1).reshape(-1, 2)
    inside = harnack_values(line, grid) <= 0
    status = classify_points(line, grid, samples=8).status
    amoeba = status != MembershipStatus.COMPLEMENT.code
    agreement = np.mean(inside == amoeba)
    assert agreement >= 0.99


@pytest.mark.parametrize("name", ["line", "p2"])
def test_orders_are_locally_constant(name, request):
    """Axis neighbours 1e-3 away never land in another complement component."""
    p = request.getfixturevalue(name)
    domain = auto_domain(p)
    rng = np.random.default_rng(8)
    points = domain.lows + rng.random((300, 2)) * domain.widths
    tester = MembershipTester(p, samples=8)
    batch = tester.classify_many(points)
    complement = batch.complement_mask
    assert complement.any()

    offsets = 1e-3 * np.array([[1, 0], [-1, 0], [0, 1], [0, -1]])
    centres = points[complement]
    neighbours = tester.classify_many((centres[:, None, :] + offsets[None, :, :]).reshape(-1, 2))
    orders = np.repeat(batch.orders[complement], len(offsets), axis=0)
    moved = neighbours.complement_mask & np.any(neighbours.orders != orders, axis=1)
    assert not moved.any()
