from __future__ import annotations

from fractions import Fraction
from math import floor, gcd

import pytest
from hypothesis import given, strategies as st

from markov_distance.lattice import (
    DegenerateSegmentError, LatticePoint, PerturbedRational, Side,
    base_crossing_sequence, deformed_crossing_sequence, fan_sequence,
    is_empty_convex_quadrilateral, is_empty_triangle, is_strictly_convex,
    peg_path_crossing_sequence, primitive_decomposition, reduce_bigons,
)

coord = st.integers(-6, 6)
point = st.tuples(coord, coord)


def primitive_directions(bound):
    return [(dx, dy) for dx in range(-bound, bound + 1) for dy in range(-bound, bound + 1)
            if (dx, dy) != (0, 0) and gcd(dx, dy) == 1]


def walk_oracle(a, d):
    """Crossing labels from the triangles visited by sample points along the segment."""
    ax, ay = a
    dx, dy = d
    n = 1
    for g in (dx, dy, dx + dy):
        if g:
            n *= abs(g)

    def triangle(s):
        x, y = ax + s * dx, ay + s * dy
        cx, cy = floor(x), floor(y)
        return cx, cy, (x - cx) + (y - cy) > 1

    labels = []
    prev = triangle(Fraction(1, 2 * n))
    for j in range(1, n):
        cur = triangle(Fraction(2 * j + 1, 2 * n))
        if cur != prev:
            if cur[:2] == prev[:2]:
                labels.append(3)
            elif cur[0] != prev[0]:
                labels.append(2)
            else:
                labels.append(1)
        prev = cur
    return tuple(labels)


class TestPrimitiveDecomposition:
    def test_examples(self):
        assert primitive_decomposition((0, 0), (2, 1)) == ((2, 1), 1, [])
        assert primitive_decomposition((0, 0), (3, 0)) == ((1, 0), 3, [(1, 0), (2, 0)])
        assert primitive_decomposition((1, 1), (5, 3)) == ((2, 1), 2, [(3, 2)])

    def test_degenerate(self):
        with pytest.raises(DegenerateSegmentError):
            primitive_decomposition((2, 2), (2, 2))


class TestBaseSequence:
    def test_examples(self):
        assert base_crossing_sequence((0, 0), (2, 1)) == (3, 2, 3)
        assert base_crossing_sequence((0, 0), (3, 2)) == (3, 2, 3, 1, 3, 2, 3)
        assert base_crossing_sequence((0, 0), (1, 0)) == ()

    def test_non_primitive_rejected(self):
        with pytest.raises(ValueError):
            base_crossing_sequence((0, 0), (2, 2))

    @pytest.mark.parametrize("d", primitive_directions(7))
    def test_matches_triangle_walk(self, d):
        assert base_crossing_sequence((0, 0), d) == walk_oracle((0, 0), d)

    @pytest.mark.parametrize("d", primitive_directions(6))
    def test_palindromic(self, d):
        seq = base_crossing_sequence((0, 0), d)
        assert seq == seq[::-1]


class TestFan:
    def test_examples(self):
        assert fan_sequence((2, 1), Side.LEFT) == (1, 3, 2)
        assert fan_sequence((2, 1), Side.RIGHT) == (2, 3, 1)
        assert fan_sequence((1, 0), Side.LEFT) == (3, 2)

    @pytest.mark.parametrize("d", primitive_directions(5))
    def test_length_and_labels(self, d):
        along_edge = d in {(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)}
        for side in Side:
            fan = fan_sequence(d, side)
            assert len(fan) == (2 if along_edge else 3)
            assert len(set(fan)) == len(fan) and set(fan) <= {1, 2, 3}

    @pytest.mark.parametrize("d", primitive_directions(4))
    def test_agrees_with_peg_model(self, d):
        # single peg bypassed on each side: the peg path is the deformation itself
        for side in Side:
            for t in (2, 3, 4):
                b = (t * d[0], t * d[1])
                pegs = [((k * d[0], k * d[1]), side) for k in range(1, t)]
                assert peg_path_crossing_sequence((0, 0), pegs, b) == \
                    deformed_crossing_sequence((0, 0), b, side)


class TestDeformed:
    def test_examples(self):
        assert deformed_crossing_sequence((0, 0), (2, 0), Side.LEFT) == (3, 2)
        assert deformed_crossing_sequence((0, 0), (3, 0), Side.LEFT) == (3, 2, 3, 2)
        assert deformed_crossing_sequence((0, 0), (2, 2), Side.LEFT) == (3, 1, 3, 2, 3)

    @given(point, point)
    def test_left_is_reversed_right(self, a, b):
        if a == b:
            return
        left = deformed_crossing_sequence(a, b, Side.LEFT)
        assert left == deformed_crossing_sequence(a, b, Side.RIGHT)[::-1]

    @given(point, point, point)
    def test_translation_invariance(self, a, b, v):
        if a == b:
            return
        a2 = (a[0] + v[0], a[1] + v[1])
        b2 = (b[0] + v[0], b[1] + v[1])
        assert deformed_crossing_sequence(a, b) == deformed_crossing_sequence(a2, b2)

    @given(point, point)
    def test_point_reflection(self, a, b):
        if a == b:
            return
        seq = deformed_crossing_sequence(a, b)
        mirrored = deformed_crossing_sequence((-a[0], -a[1]), (-b[0], -b[1]))
        assert mirrored in (seq, seq[::-1])

    @given(point, point, st.sampled_from(list(Side)))
    def test_no_repeated_labels(self, a, b, side):
        if a == b:
            return
        seq = deformed_crossing_sequence(a, b, side)
        assert all(x != y for x, y in zip(seq, seq[1:]))

    def test_degenerate(self):
        with pytest.raises(DegenerateSegmentError):
            deformed_crossing_sequence((1, 1), (1, 1))


class TestPegPath:
    def test_examples(self):
        assert peg_path_crossing_sequence((0, 0), [], (2, 1)) == (3, 2, 3)
        assert peg_path_crossing_sequence((0, 0), [((1, 0), Side.LEFT)], (2, 0)) == (3, 2)

    def test_coincident_anchors(self):
        with pytest.raises(DegenerateSegmentError):
            peg_path_crossing_sequence((0, 0), [((0, 0), Side.LEFT)], (2, 1))

    def test_reduce_bigons(self):
        assert reduce_bigons([1, 2, 2, 1, 3]) == (3,)
        assert reduce_bigons([1, 2, 3]) == (1, 2, 3)


class TestPerturbedRational:
    def test_lexicographic(self):
        small = PerturbedRational(Fraction(1), Fraction(-5))
        assert small < PerturbedRational(Fraction(1), Fraction(0)) < PerturbedRational(Fraction(1), Fraction(1))
        assert PerturbedRational(Fraction(1), Fraction(100)) < PerturbedRational(Fraction(2), Fraction(-100))

    def test_linear_arithmetic(self):
        x = PerturbedRational(Fraction(1, 2), Fraction(1))
        y = PerturbedRational(Fraction(1, 3), Fraction(-2))
        assert x + y == PerturbedRational(Fraction(5, 6), Fraction(-1))
        assert x - y == PerturbedRational(Fraction(1, 6), Fraction(3))


def _brute_empty(a, b, c):
    if (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) == 0:
        return False
    xs, ys = [p[0] for p in (a, b, c)], [p[1] for p in (a, b, c)]

    def inside(p):
        signs = []
        for u, v in ((a, b), (b, c), (c, a)):
            signs.append((v[0] - u[0]) * (p[1] - u[1]) - (v[1] - u[1]) * (p[0] - u[0]))
        return all(s >= 0 for s in signs) or all(s <= 0 for s in signs)

    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if (x, y) not in (a, b, c) and inside((x, y)):
                return False
    return True


class TestPredicates:
    def test_triangle_examples(self):
        assert is_empty_triangle((0, 0), (1, 0), (1, 1))
        assert is_empty_triangle((0, 0), (2, 1), (3, 2))
        assert not is_empty_triangle((0, 0), (2, 0), (1, 1))

    @given(*(st.tuples(st.integers(-8, 8), st.integers(-8, 8)) for _ in range(3)))
    def test_triangle_vs_enumeration(self, a, b, c):
        assert is_empty_triangle(a, b, c) == _brute_empty(a, b, c)

    def test_triangle_exhaustive_small(self):
        pts = [(x, y) for x in range(-2, 3) for y in range(-2, 3)]
        for a in pts:
            for b in pts:
                for c in pts:
                    assert is_empty_triangle(a, b, c) == _brute_empty(a, b, c)

    def test_quadrilateral_examples(self):
        assert is_empty_convex_quadrilateral((0, 0), (1, 0), (1, 1), (0, 1))
        assert is_empty_convex_quadrilateral((0, 0), (2, 1), (3, 2), (1, 1))
        assert not is_empty_convex_quadrilateral((0, 0), (1, 0), (2, 1), (0, 1))

    def test_convexity(self):
        assert is_strictly_convex([(0, 0), (1, 0), (1, 1), (0, 1)])
        assert not is_strictly_convex([(0, 0), (1, 1), (1, 0), (0, 1)])
        assert not is_strictly_convex([(0, 0), (1, 0), (2, 0), (0, 1)])

    def test_lattice_point_arithmetic(self):
        p = LatticePoint(1, 2)
        assert p + (3, 4) == (4, 6) and p - (1, 1) == (0, 1) and -p == (-1, -2)
        assert p.scaled(3) == (3, 6)
