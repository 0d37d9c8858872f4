from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from helpers import QUAD, SQUARE, TRIANGLE, convex_hull
from latticediam import (
    Direction,
    PointSet,
    Polygon2,
    ValidationError,
    count_lattice_points_polygon,
    enumerate_lattice_points,
    lattice_width,
    segment_lattice_count,
)

coords = st.integers(min_value=-60, max_value=60)


class TestDirection:
    def test_canonical_sign_and_reduction(self):
        assert Direction((2, 4)).vec == (1, 2)
        assert Direction((-1, 2)).vec == (1, -2)
        assert Direction((0, -3)).vec == (0, 1)
        assert Direction((-6, 0, -9)).vec == (2, 0, 3)

    def test_zero_rejected(self):
        with pytest.raises(ValidationError):
            Direction((0, 0))

    def test_ordering_is_total(self):
        us = [Direction(v) for v in ((1, 2), (0, 1), (2, 1), (1, -3))]
        assert sorted(us) == sorted(us, key=lambda u: u.vec)

    @given(st.lists(coords, min_size=2, max_size=4), st.integers(1, 9))
    def test_scaling_invariance(self, vec, k):
        if all(c == 0 for c in vec):
            return
        u = Direction(vec)
        assert Direction([k * c for c in vec]) == u
        assert Direction([-k * c for c in vec]) == u
        assert gcd(*u.vec) == 1
        lead = next(c for c in u.vec if c != 0)
        assert lead > 0


class TestSegmentLatticeCount:
    def test_known_values(self):
        assert segment_lattice_count((0, 0), (4, 8)) == 4
        assert segment_lattice_count((1, 1), (1, 1)) == 0
        assert segment_lattice_count((0, 0, 0), (2, 4, 6)) == 2

    @given(st.tuples(coords, coords), st.tuples(coords, coords))
    def test_matches_point_count_on_segment(self, p, q):
        # gcd distance == lattice points strictly between p and q, plus one
        g = segment_lattice_count(p, q)
        if p == q:
            assert g == 0
            return
        between = 0
        dx, dy = q[0] - p[0], q[1] - p[1]
        for t in range(1, g):
            assert (dx * t) % g == 0 and (dy * t) % g == 0
            between += 1
        assert between == g - 1


class TestPolygonValidation:
    def test_clockwise_rejected(self):
        with pytest.raises(ValidationError):
            Polygon2(((0, 0), (0, 2), (2, 0)))

    def test_collinear_vertex_rejected(self):
        with pytest.raises(ValidationError):
            Polygon2(((0, 0), (1, 0), (2, 0), (1, 1)))

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(ValidationError):
            Polygon2(((0, 0), (2, 0), (2, 0), (0, 2)))

    def test_too_few_vertices(self):
        with pytest.raises(ValidationError):
            Polygon2(((0, 0), (1, 1)))

    def test_multiply_wound_star_rejected(self):
        # pentagram visiting order: all strict left turns, but winding 2
        star = ((0, 4), (-3, -3), (4, 1), (-4, 1), (3, -3))
        with pytest.raises(ValidationError):
            Polygon2(star)
        # the same five points in convex order are fine
        assert Polygon2(((0, 4), (-4, 1), (-3, -3), (3, -3), (4, 1)))

    def test_non_integer_rejected(self):
        with pytest.raises(ValidationError):
            Polygon2(((0, 0), (1, 0), (1, Fraction(1, 2))))
        with pytest.raises(ValidationError):
            Polygon2(((0, 0), (1, 0), (1, True)))


class TestPolygonGeometry:
    def test_doubled_area(self):
        assert SQUARE.doubled_area() == 8
        assert TRIANGLE.doubled_area() == 3
        assert QUAD.doubled_area() == 28

    def test_boundary_count(self):
        assert SQUARE.boundary_lattice_count() == 8
        assert TRIANGLE.boundary_lattice_count() == 3

    def test_dilate(self):
        assert SQUARE.dilate(3).vertices == ((0, 0), (6, 0), (6, 6), (0, 6))
        assert SQUARE.dilate(2).doubled_area() == 4 * SQUARE.doubled_area()
        with pytest.raises(ValidationError):
            SQUARE.dilate(0)

    def test_contains(self):
        assert SQUARE.contains((1, 1))
        assert SQUARE.contains((0, 2))
        assert not SQUARE.contains((3, 1))

    def test_lattice_width(self):
        assert lattice_width(SQUARE, (1, 0)) == 2
        assert lattice_width(SQUARE, (1, 1)) == 4
        assert lattice_width(TRIANGLE, (0, 1)) == 2

    def test_enumeration_is_lex_sorted(self):
        pts = list(enumerate_lattice_points(QUAD))
        assert pts == sorted(pts)
        assert (0, 0) in pts and (6, 4) in pts and (3, 2) in pts


@st.composite
def hull_polygons(draw):
    pts = draw(
        st.lists(
            st.tuples(st.integers(-12, 12), st.integers(-12, 12)),
            min_size=3,
            max_size=12,
        )
    )
    verts = convex_hull(pts)
    if verts is None:
        # fall back to a fixed triangle rather than rejecting the draw
        verts = [(0, 0), (1, 0), (0, 1)]
    return Polygon2(tuple(verts))


@given(hull_polygons())
@settings(max_examples=200, deadline=None)
def test_pick_count_matches_enumeration(P):
    assert count_lattice_points_polygon(P) == len(enumerate_lattice_points(P))


@given(hull_polygons())
@settings(max_examples=100, deadline=None)
def test_halfplanes_agree_with_enumeration(P):
    (xlo, ylo), (xhi, yhi) = P.bounding_box()
    inside = set(enumerate_lattice_points(P))
    for x in range(xlo, xhi + 1):
        for y in range(ylo, yhi + 1):
            assert P.contains((x, y)) == ((x, y) in inside)


class TestPointSet:
    def test_sorted_and_deduped(self):
        S = PointSet([(1, 1), (0, 0), (1, 1), (0, 2)])
        assert S.points == ((0, 0), (0, 2), (1, 1))
        assert len(S) == 3
        assert (0, 2) in S

    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            PointSet([])

    def test_mixed_dimension_rejected(self):
        with pytest.raises(ValidationError):
            PointSet([(0, 0), (1, 1, 1)])
