"""Tests for tropical polynomials and their corner loci."""

import math

import numpy as np
import pytest

from algebra import newton_polytope, upper_facets
from amoeba import (
    archimedean_tropicalization,
    inactive_terms,
    tropical_add,
    tropical_eval,
    tropical_hypersurface,
    tropical_mul,
    tropical_vertices,
)
from models import TropicalPolynomial
from parsers import parse_polynomial

TROPICAL_LINE = TropicalPolynomial(terms=(((0, 0), 0.0), ((1, 0), 0.0), ((0, 1), 0.0)))


def test_semiring_operations():
    assert tropical_add(2.0, -1.0) == 2.0
    assert tropical_mul(2.0, -1.0) == 1.0
    assert tropical_add(-math.inf, 3.0) == 3.0


def test_eval_at_the_vertex():
    value, active = tropical_eval(TROPICAL_LINE, (0, 0))
    assert value == 0
    assert set(active) == {(0, 0), (1, 0), (0, 1)}


def test_eval_with_single_argmax():
    value, active = tropical_eval(TROPICAL_LINE, (5, 1))
    assert value == 5
    assert active == [(1, 0)]


def test_eval_single_term():
    t = TropicalPolynomial(terms=(((1, 1), 2.0),))
    value, _ = tropical_eval(t, (3, 4))
    assert value == 9


def test_archimedean_tropicalization():
    t = archimedean_tropicalization(parse_polynomial("z1 + z2 + 1"))
    assert {alpha: a for alpha, a in t.terms} == {(1, 0): 0.0, (0, 1): 0.0, (0, 0): 0.0}
    t = archimedean_tropicalization(parse_polynomial("50z2^3 + 1"))
    assert t.coefficient((0, 3)) == pytest.approx(math.log(50))
    t = archimedean_tropicalization(parse_polynomial(f"{math.exp(10)!r}*z1 + 1"))
    assert t.coefficient((1,)) == pytest.approx(10)


def test_tropical_line():
    curve = tropical_hypersurface(TROPICAL_LINE)
    assert curve.vertices == [(0.0, 0.0)]
    assert len(curve.segments) == 0
    directions = set()
    for ray in curve.rays:
        d = np.asarray(ray.direction)
        directions.add(tuple(np.round(d / np.abs(d).max(), 9)))
    assert directions == {(1.0, 1.0), (0.0, -1.0), (-1.0, 0.0)}


def test_two_term_diagonal():
    """max(x, y) has the diagonal as its corner locus."""
    t = TropicalPolynomial(terms=(((1, 0), 0.0), ((0, 1), 0.0)))
    curve = tropical_hypersurface(t)
    assert curve.vertices == []
    assert len(curve.rays) == 2
    for ray in curve.rays:
        x, y = ray.start
        assert x == pytest.approx(y)
        dx, dy = ray.direction
        assert dx == pytest.approx(dy)


def test_vertices_match_dual_subdivision():
    """Generic heights: one curve vertex per triangle of the lifted subdivision."""
    rng = np.random.default_rng(8)
    exponents = [(0, 0), (2, 0), (0, 2), (1, 1), (2, 2)]
    for _ in range(5):
        heights = rng.normal(size=len(exponents))
        t = TropicalPolynomial(terms=tuple(zip(exponents, heights)))
        cells = upper_facets(exponents, heights)
        triangles = [c for c in cells if len(c) == 3]
        assert len(cells) == len(triangles)
        assert len(tropical_hypersurface(t).vertices) == len(triangles)


def test_vertices_in_three_variables():
    t = TropicalPolynomial(terms=(
        ((0, 0, 0), 0.0), ((1, 0, 0), 0.0), ((0, 1, 0), 0.0), ((0, 0, 1), 0.0),
    ))
    vertices = tropical_vertices(t)
    assert len(vertices) == 1
    point, active = vertices[0]
    assert point == pytest.approx((0.0, 0.0, 0.0))
    assert len(active) == 4


def test_shifted_vertex():
    """Coefficient e¹⁰ on z1 and z2 moves the vertex of the line to (-10, -10)."""
    p = parse_polynomial(f"{math.exp(10)!r}*z1 + {math.exp(10)!r}*z2 + 1")
    vertices = tropical_vertices(archimedean_tropicalization(p))
    assert vertices[0][0] == pytest.approx((-10.0, -10.0))


def test_inactive_terms():
    """A very small coefficient never wins on a bounded box."""
    t = TropicalPolynomial(terms=(((0, 0), 0.0), ((1, 0), 0.0), ((0, 1), 0.0), ((1, 1), -50.0)))
    assert inactive_terms(t, (-1, -1), (1, 1)) == ((1, 1),)


def test_every_edge_borders_two_maximal_terms(p3):
    t = archimedean_tropicalization(p3)
    curve = tropical_hypersurface(t)
    polytope = newton_polytope(p3)
    assert len(curve.vertices) >= 1
    for edge in curve.segments:
        middle = (np.asarray(edge.start) + np.asarray(edge.end)) / 2
        _, active = tropical_eval(t, middle)
        assert set(edge.active) <= set(active)
        for alpha in edge.active:
            assert polytope.contains(alpha)
