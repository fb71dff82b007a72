from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpplanar.geometry import (CollinearOverlap, NotIntersecting, Point,
                               between, inside, intersection_point,
                               intersects, left, on_segment)
from oracles import segments_intersect_oracle

points = st.builds(Point, st.integers(-8, 8), st.integers(-8, 8))


class TestLeft:
    def test_strictly_left(self):
        assert left((0, 0), (4, 0), (3, 1))

    def test_ray_cases(self):
        # collinear beyond the far endpoint stays on the ray
        assert left((0, 0), (4, 0), (6, 0))
        assert not left((0, 0), (4, 0), (1, -1))

    def test_first_two_equal_is_false(self):
        assert not left((1, 1), (1, 1), (5, 2))

    def test_strictly_between_counts_for_both_directions(self):
        assert left((0, 0), (4, 0), (2, 0))
        assert left((4, 0), (0, 0), (2, 0))

    def test_endpoint_identities(self):
        assert not left((0, 0), (4, 0), (0, 0))
        assert left((0, 0), (4, 0), (4, 0))

    @given(points, points, points)
    def test_totality_b11(self, u, v, w):
        if u != v:
            assert left(u, v, w) or left(v, u, w)

    @given(points, points, points)
    def test_both_directions_means_between(self, u, v, w):
        if left(u, v, w) and left(v, u, w):
            assert between(u, v, w)
            assert w != u and w != v


class TestBetween:
    def test_midpoint(self):
        assert between((0, 0), (4, 0), (2, 0))

    def test_endpoint_excluded(self):
        assert not between((0, 0), (4, 0), (4, 0))

    def test_non_collinear(self):
        assert not between((0, 0), (4, 0), (2, 1))


class TestIntersects:
    def test_crossing_from_redundancy_figure(self):
        assert intersects((-7, 1), (-3, 1), (-5, 2), (-5, 0))

    def test_shared_endpoint_of_both_is_not_an_intersection(self):
        assert not intersects((0, 0), (2, 0), (2, 0), (3, 2))

    def test_endpoint_interior_to_other_segment(self):
        assert intersects((0, 0), (4, 0), (2, 0), (2, 3))

    def test_segment_never_intersects_itself(self):
        assert not intersects((0, 0), (4, 0), (0, 0), (4, 0))
        assert not intersects((0, 0), (4, 0), (4, 0), (0, 0))

    def test_collinear_overlap(self):
        assert intersects((0, 0), (4, 0), (2, 0), (6, 0))
        # touching at a single shared endpoint does not count
        assert not intersects((0, 0), (2, 0), (2, 0), (4, 0))

    @given(points, points, points, points)
    def test_symmetries(self, u, v, w, x):
        base = intersects(u, v, w, x)
        assert intersects(v, u, w, x) == base
        assert intersects(u, v, x, w) == base
        assert intersects(w, x, u, v) == base

    @settings(max_examples=500)
    @given(points, points, points, points)
    def test_matches_rational_oracle(self, u, v, w, x):
        assert intersects(u, v, w, x) == segments_intersect_oracle(u, v, w, x)


class TestInside:
    def test_interior_point_from_coexistence_figure(self):
        assert inside((-3, -5), (5, -5), (1, 1), (1, -3))

    def test_corner_excluded(self):
        assert not inside((0, 0), (4, 0), (2, 2), (0, 0))

    def test_degenerate_triangle_is_an_oriented_open_segment(self):
        u, v, w = (0, 0), (4, 0), (2, 0)
        assert inside(u, v, w, (1, 0))
        assert not inside(u, v, w, (3, 0))
        assert inside(v, u, w, (3, 0))

    @given(points, points, points, points)
    def test_rotation_invariance(self, u, v, w, x):
        assert inside(u, v, w, x) == inside(v, w, u, x) == inside(w, u, v, x)

    @given(points, points, points, points, points)
    @settings(max_examples=300)
    def test_transitivity(self, u, v, w, x, y):
        if inside(u, v, x, y) and inside(u, v, w, x):
            assert inside(u, v, w, y)


class TestIntersectionPoint:
    def test_axis_crossing(self):
        q = intersection_point((0, 0), (4, 0), (2, -2), (2, 2))
        assert (q.x, q.y) == (Fraction(2), Fraction(0))
        assert q.x_num == 2 and q.x_den == 1

    def test_redundancy_figure_crossing(self):
        q = intersection_point((-7, 1), (-3, 1), (-5, 2), (-5, 0))
        assert (q.x, q.y) == (Fraction(-5), Fraction(1))

    def test_diagonal(self):
        q = intersection_point((0, 0), (3, 3), (0, 3), (3, 0))
        assert (q.x, q.y) == (Fraction(3, 2), Fraction(3, 2))

    def test_not_intersecting(self):
        with pytest.raises(NotIntersecting):
            intersection_point((0, 0), (1, 0), (0, 1), (1, 1))

    def test_collinear_overlap_reported_distinctly(self):
        with pytest.raises(CollinearOverlap):
            intersection_point((0, 0), (4, 0), (2, 0), (6, 0))

    @settings(max_examples=300)
    @given(points, points, points, points)
    def test_point_lies_on_both_segments_exactly(self, u, v, w, x):
        if not intersects(u, v, w, x):
            return
        try:
            q = intersection_point(u, v, w, x)
        except CollinearOverlap:
            return
        # exact line-equation residues vanish
        for a, b in ((u, v), (w, x)):
            res = (Fraction(b[0] - a[0]) * (q.y - a[1])
                   - Fraction(b[1] - a[1]) * (q.x - a[0]))
            assert res == 0
        assert on_segment(q, u, v) and on_segment(q, w, x)
