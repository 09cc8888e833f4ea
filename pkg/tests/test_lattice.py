"""Unit tests for the exact lattice primitives.

The interior point count is checked against Pick's identity, which the
implementation deliberately does not use, so the two sides are
independent computations of the same number.
"""

import math
from fractions import Fraction

import pytest

from toricbn import (
    LatticePolygon,
    Line,
    ParallelLinesError,
    RationalPoint,
    boundary_lattice_points,
    convex_hull,
    det2,
    interior_lattice_points,
    lattice_distance,
    line_intersection,
    pairing,
    primitivize,
    rational_point_of,
    rotate_cw,
    vec,
)


class TestVectorBasics:
    def test_arithmetic(self):
        assert vec(1, 2) + vec(3, -4) == vec(4, -2)
        assert vec(1, 2) - vec(3, -4) == vec(-2, 6)
        assert -vec(1, -2) == vec(-1, 2)
        assert vec(1, -2).scale(-3) == vec(-3, 6)

    def test_predicates(self):
        assert vec(0, 0).is_zero()
        assert not vec(0, 1).is_zero()
        assert vec(2, -3).is_primitive()
        assert not vec(2, -4).is_primitive()
        assert not vec(0, 0).is_primitive(), "zero must never count as primitive"

    def test_pairing_and_det(self):
        assert pairing(vec(2, 3), vec(5, -1)) == 7
        assert det2(vec(1, 0), vec(0, 1)) == 1
        assert det2(vec(2, 1), vec(1, 1)) == 1
        assert det2(vec(1, 1), vec(2, 2)) == 0
        assert det2(vec(-2, 1), vec(1, -2)) == 3

    def test_rotate_cw(self):
        assert rotate_cw(vec(1, 0)) == vec(0, -1)
        assert rotate_cw(vec(0, 1)) == vec(1, 0)
        # rotating twice negates
        assert rotate_cw(rotate_cw(vec(3, -5))) == vec(-3, 5)

    def test_primitivize(self):
        assert primitivize(vec(4, -6)) == (vec(2, -3), 2)
        assert primitivize(vec(2, 4)) == (vec(1, 2), 2)
        assert primitivize(vec(-3, 0)) == (vec(-1, 0), 3)
        assert primitivize(vec(0, -7)) == (vec(0, -1), 7)
        assert primitivize(vec(1, 1)) == (vec(1, 1), 1)
        with pytest.raises(ValueError):
            primitivize(vec(0, 0))


class TestLatticeDistance:
    def test_examples(self):
        assert lattice_distance(vec(0, 0), vec(4, 6)) == 2
        assert lattice_distance(vec(1, 1), vec(1, 1)) == 0
        assert lattice_distance(vec(0, 0), vec(2, 0)) == 2
        assert lattice_distance(vec(1, 0), vec(2, 1)) == 1
        assert lattice_distance(vec(0, 0), vec(0, 5)) == 5
        assert lattice_distance(vec(-1, 2), vec(2, -2)) == 1

    def test_brute_force_oracle(self):
        """gcd distance == lattice points strictly inside the segment, plus 1.

        The strict interior points are found by scanning every rational
        subdivision point of the segment, with no gcd in sight.
        """
        for dx in range(-6, 7):
            for dy in range(-6, 7):
                if dx == 0 and dy == 0:
                    continue
                a, b = vec(2, -1), vec(2 + dx, -1 + dy)
                steps = 0
                denom = max(abs(dx), abs(dy))
                for t in range(1, denom):
                    px = Fraction(2) + Fraction(t * dx, denom)
                    py = Fraction(-1) + Fraction(t * dy, denom)
                    if px.denominator == 1 and py.denominator == 1:
                        steps += 1
                assert lattice_distance(a, b) == steps + 1


class TestRationalPoints:
    def test_lattice_conversion(self):
        p = RationalPoint.of(Fraction(4, 2), Fraction(-3))
        assert p.is_lattice
        assert p.to_lattice() == vec(2, -3)
        q = RationalPoint.of(Fraction(1, 3), Fraction(2, 3))
        assert not q.is_lattice
        with pytest.raises(ValueError):
            q.to_lattice()

    def test_translate(self):
        p = rational_point_of(vec(1, 1)).translate(vec(-3, 2))
        assert (p.x, p.y) == (Fraction(-2), Fraction(3))


class TestLines:
    def test_normal_must_be_primitive(self):
        with pytest.raises(ValueError):
            Line(vec(2, 4), 1)
        with pytest.raises(ValueError):
            Line(vec(0, 0), 0)

    def test_value_and_contains(self):
        ln = Line(vec(1, 2), 5)
        assert ln.value_at(vec(1, 2)) == 5
        assert ln.contains(vec(3, 1))
        assert not ln.contains(vec(0, 0))
        assert ln.contains(RationalPoint.of(Fraction(1, 2), Fraction(9, 4)))

    def test_intersection_satisfies_both_equations(self):
        l1 = Line(vec(1, 2), 5)
        l2 = Line(vec(3, -1), 4)
        p = line_intersection(l1, l2)
        assert p.x + 2 * p.y == 5
        assert 3 * p.x - p.y == 4

    def test_lattice_and_non_lattice_intersections(self):
        p = line_intersection(Line(vec(-1, 1), -1), Line(vec(-2, 1), -3))
        assert p.is_lattice
        assert p.to_lattice() == vec(2, 1)
        q = line_intersection(Line(vec(2, -1), 0), Line(vec(1, 1), 1))
        assert not q.is_lattice
        assert (q.x, q.y) == (Fraction(1, 3), Fraction(2, 3))

    def test_parallel_raises(self):
        with pytest.raises(ParallelLinesError):
            line_intersection(Line(vec(1, 2), 0), Line(vec(1, 2), 3))
        with pytest.raises(ParallelLinesError):
            line_intersection(Line(vec(1, 2), 0), Line(vec(-1, -2), 3))


class TestConvexHull:
    def test_single_point(self):
        h = convex_hull([vec(3, 3), vec(3, 3)])
        assert h.kind == "point"
        assert h.vertices == (vec(3, 3),)

    def test_segment(self):
        h = convex_hull([vec(0, 0), vec(2, 4), vec(1, 2)])
        assert h.kind == "segment"
        assert h.vertices == (vec(0, 0), vec(2, 4))

    def test_triangle_with_interior_point(self):
        h = convex_hull([vec(2, 1), vec(1, 2), vec(1, 1), vec(0, 0)])
        assert h.kind == "polygon"
        assert h.vertices == (vec(0, 0), vec(2, 1), vec(1, 2))

    def test_square_drops_interior_and_edge_points(self):
        pts = [vec(0, 0), vec(2, 0), vec(2, 2), vec(0, 2), vec(1, 1), vec(1, 0)]
        h = convex_hull(pts)
        assert h.kind == "polygon"
        assert h.vertices == (vec(0, 0), vec(2, 0), vec(2, 2), vec(0, 2))
        assert h.twice_area() == 8

    def test_ccw_and_lex_start(self):
        h = convex_hull([vec(1, 0), vec(0, 1), vec(-1, -1)])
        assert h.vertices[0] == vec(-1, -1)
        # counter-clockwise orientation: positive shoelace
        assert h.twice_area() == 3

    def test_idempotent(self):
        pts = [vec(0, 0), vec(4, 1), vec(2, 5), vec(1, 3)]
        h1 = convex_hull(pts)
        h2 = convex_hull(h1.vertices)
        assert h1 == h2

    def test_contains(self):
        h = convex_hull([vec(0, 0), vec(3, 0), vec(0, 3)])
        assert h.contains(vec(1, 1), strict=True)
        assert h.contains(vec(1, 0))
        assert not h.contains(vec(1, 0), strict=True)
        assert not h.contains(vec(2, 2))
        assert h.contains(RationalPoint.of(Fraction(1, 2), Fraction(1, 2)), strict=True)

    def test_empty_raises(self):
        with pytest.raises(ValueError):
            convex_hull([])


class TestPointCounts:
    def pick_area(self, poly: LatticePolygon) -> Fraction:
        """Pick's identity written the other way around: area from counts."""
        i = interior_lattice_points(poly)
        b = boundary_lattice_points(poly)
        return Fraction(i) + Fraction(b, 2) - 1

    def test_unit_triangle(self):
        t = convex_hull([vec(0, 0), vec(1, 0), vec(0, 1)])
        assert interior_lattice_points(t) == 0
        assert boundary_lattice_points(t) == 3
        assert self.pick_area(t) * 2 == t.twice_area()

    def test_bigger_triangle(self):
        t = convex_hull([vec(0, 0), vec(3, 0), vec(0, 3)])
        assert interior_lattice_points(t) == 1
        assert boundary_lattice_points(t) == 9

    def test_square(self):
        s = convex_hull([vec(0, 0), vec(3, 0), vec(3, 3), vec(0, 3)])
        assert interior_lattice_points(s) == 4
        assert boundary_lattice_points(s) == 12
        assert self.pick_area(s) == 9

    def test_degenerate_counts(self):
        pt = convex_hull([vec(5, 5)])
        assert interior_lattice_points(pt) == 0
        assert boundary_lattice_points(pt) == 1
        seg = convex_hull([vec(0, 0), vec(4, 6)])
        assert interior_lattice_points(seg) == 0
        assert boundary_lattice_points(seg) == 3
        assert boundary_lattice_points(convex_hull([vec(0, 0), vec(0, 3)])) == 4

    def test_genus_one_triangle(self):
        t = convex_hull([vec(0, 0), vec(2, 1), vec(1, 2)])
        assert interior_lattice_points(t) == 1
        assert boundary_lattice_points(t) == 3

    def test_pick_on_a_skew_polygon(self):
        p = convex_hull([vec(-2, -1), vec(3, 0), vec(2, 4), vec(-1, 3)])
        assert self.pick_area(p) * 2 == p.twice_area()
