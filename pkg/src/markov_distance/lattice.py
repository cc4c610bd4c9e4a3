"""Exact geometry of the triangulated plane.

The triangulation has a vertex at every lattice point and three edge
families: horizontal edges (label 1, on the lines ``y = k``), vertical
edges (label 2, on ``x = k``) and anti-diagonal edges from ``(i, j)`` to
``(i + 1, j - 1)`` (label 3, on ``x + y = k``).  Every line of those three
families is covered by edges of a single label, so the label of a crossing
only depends on which family of lines is crossed.

Nothing in this module uses floating point.  Infinitesimal deformations are
modelled with :class:`PerturbedRational`, a first-order expansion in a
positive infinitesimal ``eps``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import floor, gcd, ceil
from typing import Iterable, NamedTuple, Sequence


class DegenerateSegmentError(ValueError):
    """Raised when a segment or path leg has coincident endpoints."""


class LatticePoint(NamedTuple):
    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return LatticePoint(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return LatticePoint(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return LatticePoint(-self.x, -self.y)

    def scaled(self, k: int) -> "LatticePoint":
        return LatticePoint(k * self.x, k * self.y)


class Direction(NamedTuple):
    """A primitive lattice vector ``(dx, dy)``."""

    dx: int
    dy: int

    @classmethod
    def checked(cls, dx: int, dy: int) -> "Direction":
        if (dx, dy) == (0, 0):
            raise DegenerateSegmentError("direction (0, 0) is degenerate")
        if gcd(dx, dy) != 1:
            raise ValueError(f"direction ({dx}, {dy}) is not primitive")
        return cls(dx, dy)


class Side(enum.Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def opposite(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


# (normal vector, label): the line family {p : n.p = k} carries this label.
LINE_FAMILIES = (((0, 1), 1), ((1, 0), 2), ((1, 1), 3))

# The six edges incident to a lattice point, with their labels.
INCIDENT_EDGES = (
    ((1, 0), 1), ((-1, 0), 1),
    ((0, 1), 2), ((0, -1), 2),
    ((1, -1), 3), ((-1, 1), 3),
)


def as_point(p: Iterable[int]) -> LatticePoint:
    x, y = p
    return LatticePoint(int(x), int(y))


def cross(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[0] + u[1] * v[1]


def _check_sequence(labels: Sequence[int]) -> tuple[int, ...]:
    labels = tuple(labels)
    for a, b in zip(labels, labels[1:]):
        if a == b:
            raise ValueError(f"crossing sequence {labels} repeats label {a}")
    return labels


# ---------------------------------------------------------------------------
# first-order infinitesimal arithmetic
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PerturbedRational:
    """The number ``base + eps * e`` for a positive infinitesimal ``e``.

    Comparison is lexicographic in ``(base, eps)``.  Products of two
    infinitesimal parts are not representable and raise.
    """

    base: Fraction
    eps: Fraction = Fraction(0)

    @staticmethod
    def of(value) -> "PerturbedRational":
        if isinstance(value, PerturbedRational):
            return value
        return PerturbedRational(Fraction(value))

    def _key(self):
        return (self.base, self.eps)

    def __lt__(self, other):
        return self._key() < PerturbedRational.of(other)._key()

    def __le__(self, other):
        return self._key() <= PerturbedRational.of(other)._key()

    def __gt__(self, other):
        return self._key() > PerturbedRational.of(other)._key()

    def __ge__(self, other):
        return self._key() >= PerturbedRational.of(other)._key()

    def __eq__(self, other):
        if not isinstance(other, (PerturbedRational, int, Fraction)):
            return NotImplemented
        return self._key() == PerturbedRational.of(other)._key()

    def __hash__(self):
        return hash(self._key())

    def __add__(self, other):
        o = PerturbedRational.of(other)
        return PerturbedRational(self.base + o.base, self.eps + o.eps)

    __radd__ = __add__

    def __neg__(self):
        return PerturbedRational(-self.base, -self.eps)

    def __sub__(self, other):
        return self + (-PerturbedRational.of(other))

    def __rsub__(self, other):
        return PerturbedRational.of(other) - self

    def __mul__(self, other):
        o = PerturbedRational.of(other)
        if self.eps and o.eps:
            raise ArithmeticError("product of two infinitesimal terms")
        return PerturbedRational(self.base * o.base,
                                 self.base * o.eps + self.eps * o.base)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # first-order expansion of (a + a'e) / (b + b'e)
        o = PerturbedRational.of(other)
        if o.base == 0:
            raise ZeroDivisionError("division by an infinitesimal")
        return PerturbedRational(
            self.base / o.base,
            (self.eps * o.base - self.base * o.eps) / (o.base * o.base),
        )

    def __repr__(self):
        return f"PerturbedRational({self.base}, {self.eps})"


# ---------------------------------------------------------------------------
# segments and deformations
# ---------------------------------------------------------------------------

def primitive_decomposition(a, b) -> tuple[Direction, int, list[LatticePoint]]:
    """Split ``b - a`` into ``t`` copies of a primitive step.

    Returns ``(d, t, pegs)`` where ``pegs`` are the lattice points strictly
    between ``a`` and ``b`` on the segment.
    """
    a, b = as_point(a), as_point(b)
    dx, dy = b.x - a.x, b.y - a.y
    if dx == 0 and dy == 0:
        raise DegenerateSegmentError(f"segment {a}-{b} has coincident endpoints")
    t = gcd(dx, dy)
    d = Direction(dx // t, dy // t)
    pegs = [a + (k * d.dx, k * d.dy) for k in range(1, t)]
    return d, t, pegs


def base_crossing_sequence(a, d) -> tuple[int, ...]:
    """Labels of the edges crossed by the open segment from ``a`` to ``a + d``."""
    a = as_point(a)
    d = Direction.checked(*d)
    crossings: list[tuple[Fraction, int]] = []
    for normal, label in LINE_FAMILIES:
        c0 = dot(normal, a)
        g = dot(normal, d)
        if g == 0:
            continue
        lo, hi = sorted((c0, c0 + g))
        for k in range(lo + 1, hi):
            crossings.append((Fraction(k - c0, g), label))
    crossings.sort()
    for (t1, _), (t2, _) in zip(crossings, crossings[1:]):
        if t1 == t2:
            raise AssertionError(f"tied crossing at t={t1} on primitive step {d}")
    return tuple(label for _, label in crossings)


def fan_sequence(d, side: Side) -> tuple[int, ...]:
    """Edges at a bypassed lattice point crossed by a deformation along ``d``.

    On the left, the crossed edges are those pointing into the open left
    half-plane, visited from the one just behind the point to the one just
    ahead of it (clockwise); on the right it is the mirror image.
    """
    d = Direction.checked(*d)
    sign = 1 if side is Side.LEFT else -1
    edges = [(e, lab) for e, lab in INCIDENT_EDGES if sign * cross(d, e) > 0]

    def order(u, v):
        # clockwise sweep on the left, counterclockwise on the right
        return sign * cross(u[0], v[0])

    edges.sort(key=cmp_to_key(order))
    return tuple(lab for _, lab in edges)


def deformed_crossing_sequence(a, b, side: Side = Side.LEFT) -> tuple[int, ...]:
    d, t, _ = primitive_decomposition(a, b)
    base = base_crossing_sequence(a, d)
    fan = fan_sequence(d, side)
    labels: list[int] = list(base)
    for _ in range(t - 1):
        labels.extend(fan)
        labels.extend(base)
    return _check_sequence(labels)


# ---------------------------------------------------------------------------
# taut peg paths (epsilon-offset polyline model)
# ---------------------------------------------------------------------------

# A small convex hexagon around each peg, one vertex inside each of the six
# sectors cut out by the incident edges; no vertex lies on a grid line
# through the peg.  Listed counterclockwise.
_PEG_HULL = ((2, 2), (-1, 4), (-4, 1), (-2, -2), (1, -4), (4, -1))


class _PPoint(NamedTuple):
    x: PerturbedRational
    y: PerturbedRational


def _ppoint(anchor: LatticePoint, offset=(0, 0)) -> _PPoint:
    return _PPoint(PerturbedRational(Fraction(anchor.x), Fraction(offset[0])),
                   PerturbedRational(Fraction(anchor.y), Fraction(offset[1])))


def _segment_crossings(p0: _PPoint, p1: _PPoint) -> list[int]:
    found: list[tuple[PerturbedRational, int]] = []
    for (nx, ny), label in LINE_FAMILIES:
        c = p0.x * nx + p0.y * ny
        g = (p1.x - p0.x) * nx + (p1.y - p0.y) * ny
        if g.base != 0:
            end = c + g
            lo = min(c.base, end.base)
            hi = max(c.base, end.base)
            for k in range(floor(lo), ceil(hi) + 1):
                t = (k - c) / g
                if 0 < t < 1:
                    found.append((t, label))
        elif g.eps != 0:
            # macroscopically parallel to the family: only the line the
            # segment runs along can be crossed, at an exact parameter
            if c.base.denominator == 1:
                t = PerturbedRational(-c.eps / g.eps)
                if 0 < t < 1:
                    found.append((t, label))
        # g == 0 exactly: the segment runs along a triangulation edge or
        # parallel to the family at a fixed offset; nothing is crossed
    found.sort(key=lambda item: item[0]._key())
    for (t1, _), (t2, _) in zip(found, found[1:]):
        if t1 == t2:
            raise AssertionError(f"tied crossing parameter {t1}")
    return [label for _, label in found]


def _support(direction, tiebreak, prefer_max: bool) -> int:
    best = None
    for idx, v in enumerate(_PEG_HULL):
        key = (dot(v, direction), dot(v, tiebreak) if prefer_max else -dot(v, tiebreak))
        if best is None or key > best[0]:
            best = (key, idx)
    return best[1]


def _hug(d_in, d_out, side: Side) -> list[tuple[int, int]]:
    """Hull vertices visited while wrapping a peg between two legs."""
    if side is Side.LEFT:
        normal_in, normal_out, step = (-d_in[1], d_in[0]), (-d_out[1], d_out[0]), -1
        if cross(d_in, d_out) > 0:
            raise ValueError("path is not taut: left-side peg on a left turn")
    else:
        normal_in, normal_out, step = (d_in[1], -d_in[0]), (d_out[1], -d_out[0]), 1
        if cross(d_in, d_out) < 0:
            raise ValueError("path is not taut: right-side peg on a right turn")
    i = _support(normal_in, d_in, prefer_max=False)
    j = _support(normal_out, d_out, prefer_max=True)
    visited = [_PEG_HULL[i]]
    while i != j:
        i = (i + step) % len(_PEG_HULL)
        visited.append(_PEG_HULL[i])
    return visited


def reduce_bigons(labels: Iterable[int]) -> tuple[int, ...]:
    """Cancel pairs of consecutive equal labels (an edge crossed twice)."""
    stack: list[int] = []
    for lab in labels:
        if stack and stack[-1] == lab:
            stack.pop()
        else:
            stack.append(lab)
    return tuple(stack)


def peg_path_crossing_sequence(a, waypoints, b) -> tuple[int, ...]:
    """Crossing sequence of a taut path from ``a`` to ``b`` around pegs.

    ``waypoints`` is a list of ``(point, side)``; the path runs straight
    between consecutive anchors and passes each waypoint on the given side
    (``Side.LEFT`` keeps the peg on the path's right).  The path is modelled
    as a polyline whose vertices near each peg sit at infinitesimal offsets
    on a small hexagon around it, and its crossings are enumerated exactly.
    """
    anchors = [as_point(a)] + [as_point(w) for w, _ in waypoints] + [as_point(b)]
    sides = [Side(s) if not isinstance(s, Side) else s for _, s in waypoints]
    legs = []
    for p, q in zip(anchors, anchors[1:]):
        if p == q:
            raise DegenerateSegmentError(f"consecutive anchors coincide at {p}")
        step = (q.x - p.x, q.y - p.y)
        if gcd(*step) != 1:
            raise ValueError(f"leg {p}-{q} passes through a lattice point; "
                             "add it as a waypoint")
        legs.append(step)

    vertices = [_ppoint(anchors[0])]
    for k, side in enumerate(sides):
        for v in _hug(legs[k], legs[k + 1], side):
            vertices.append(_ppoint(anchors[k + 1], v))
    vertices.append(_ppoint(anchors[-1]))

    labels: list[int] = []
    for p0, p1 in zip(vertices, vertices[1:]):
        labels.extend(_segment_crossings(p0, p1))
    return reduce_bigons(labels)


# ---------------------------------------------------------------------------
# emptiness predicates
# ---------------------------------------------------------------------------

def is_empty_triangle(a, b, c) -> bool:
    """True iff ``abc`` is a lattice triangle with no other lattice points.

    By Pick's theorem this is exactly the case of area 1/2.
    """
    a, b, c = as_point(a), as_point(b), as_point(c)
    return abs(cross(b - a, c - a)) == 1


def is_strictly_convex(points: Sequence) -> bool:
    pts = [as_point(p) for p in points]
    n = len(pts)
    turns = [cross(pts[(i + 1) % n] - pts[i], pts[(i + 2) % n] - pts[(i + 1) % n])
             for i in range(n)]
    return all(t > 0 for t in turns) or all(t < 0 for t in turns)


def is_empty_convex_quadrilateral(a, b, c, d) -> bool:
    if not is_strictly_convex((a, b, c, d)):
        return False
    return (is_empty_triangle(a, b, c) and is_empty_triangle(a, c, d)
            and is_empty_triangle(a, b, d) and is_empty_triangle(b, c, d))
