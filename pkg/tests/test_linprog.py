from fractions import Fraction

import pytest

from videal.errors import InfeasibleError, ResourceLimitError, UnboundedError
from videal.linprog import RationalPolyhedron, enumerate_vertices, lp_minimize


def F(a, b=1):
    return Fraction(a, b)


def test_simplex_unit_simplex():
    poly = RationalPolyhedron(3, [([1, 1, 1], 1)])
    value, point = lp_minimize(poly, [1, 1, 1])
    assert value == 1
    assert sum(point) == 1
    assert poly.contains(point)


def test_simplex_fractional_cover_triangle():
    poly = RationalPolyhedron(3, [([1, 1, 0], 1), ([0, 1, 1], 1), ([1, 0, 1], 1)])
    value, point = lp_minimize(poly, [1, 1, 1])
    assert value == F(3, 2)
    assert point == (F(1, 2), F(1, 2), F(1, 2))


def test_simplex_weighted_objective():
    poly = RationalPolyhedron(2, [([2, 1], 4), ([1, 3], 6)])
    value, point = lp_minimize(poly, [1, 1])
    assert value == F(14, 5)
    assert poly.contains(point)


def test_simplex_infeasible():
    poly = RationalPolyhedron(1, [([-1], 1)])  # -y >= 1 with y >= 0
    with pytest.raises(InfeasibleError):
        lp_minimize(poly, [1])


def test_simplex_unbounded():
    poly = RationalPolyhedron(1, [([1], 1)])
    with pytest.raises(UnboundedError):
        lp_minimize(poly, [-1])


def test_vertex_enumeration_unit_constraint():
    poly = RationalPolyhedron(3, [([1, 1, 1], 1)])
    verts = enumerate_vertices(poly)
    expected = {
        (F(1), F(0), F(0)),
        (F(0), F(1), F(0)),
        (F(0), F(0), F(1)),
    }
    assert set(verts) == expected


def test_vertex_enumeration_triangle_cover():
    poly = RationalPolyhedron(3, [([1, 1, 0], 1), ([0, 1, 1], 1), ([1, 0, 1], 1)])
    verts = set(enumerate_vertices(poly))
    assert verts == {
        (F(1, 2), F(1, 2), F(1, 2)),
        (F(1), F(1), F(0)),
        (F(1), F(0), F(1)),
        (F(0), F(1), F(1)),
    }


def test_vertex_enumeration_dimension_cap():
    poly = RationalPolyhedron(13, [([1] * 13, 1)])
    with pytest.raises(ResourceLimitError):
        enumerate_vertices(poly)


def test_lp_optimum_matches_vertex_scan():
    systems = [
        RationalPolyhedron(3, [([1, 1, 0], 1), ([0, 1, 1], 1), ([1, 0, 1], 1)]),
        RationalPolyhedron(3, [([1, 1, 1], 1)]),
        RationalPolyhedron(2, [([2, 1], 4), ([1, 3], 6)]),
        RationalPolyhedron(4, [([1, 1, 0, 0], 1), ([0, 0, 1, 1], 1), ([1, 0, 1, 0], 2)]),
    ]
    for poly in systems:
        ones = [1] * poly.dimension
        value, _ = lp_minimize(poly, ones)
        best = min(sum(v) for v in enumerate_vertices(poly))
        assert value == best


def test_determinism():
    poly = RationalPolyhedron(3, [([1, 1, 0], 1), ([0, 1, 1], 1), ([1, 0, 1], 1)])
    runs = {lp_minimize(poly, [1, 1, 1]) for _ in range(3)}
    assert len(runs) == 1
    assert enumerate_vertices(poly) == enumerate_vertices(poly)
