"""Executable forms of the identities and inequalities satisfied by the
Markov distance, plus line scans, neighbourhood maps and ratio sequences.

Every comparison is made on exact integers or fractions.  Decimal values
(60 significant digits) appear only in reports.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from decimal import Context, Decimal, localcontext
from fractions import Fraction
from math import comb, gcd
from typing import NamedTuple, Optional

from .lattice import (
    LatticePoint, as_point, cross, is_empty_convex_quadrilateral,
    is_empty_triangle, is_strictly_convex, peg_path_crossing_sequence,
)
from .markov import MarkovTriple, m, markov_distance
from .snake import build_snake_graph, count_matchings_fast

DIGITS = 60


class PreconditionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# high precision constants
# ---------------------------------------------------------------------------

def _context():
    return localcontext(Context(prec=DIGITS + 10))


def to_decimal(x: Fraction, digits: int = DIGITS) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits
        return Decimal(x.numerator) / Decimal(x.denominator)


def golden_ratio() -> Decimal:
    with _context():
        return (1 + Decimal(5).sqrt()) / 2


def fibonacci_limit_target(a: int) -> Decimal:
    """``(3 / sqrt 5)^(a-1) * phi^(3-a)``, the limit of ``m_{q,a} / m_{q+a-2,1}``."""
    with _context():
        value = (3 / Decimal(5).sqrt()) ** (a - 1) * golden_ratio() ** (3 - a)
    return _round(value)


def pell_constant() -> Decimal:
    """``3^15 ((2 - sqrt 2) / 4)^15 (3 + sqrt 8)^7``."""
    with _context():
        value = (Decimal(3) ** 15 * ((2 - Decimal(2).sqrt()) / 4) ** 15
                 * (3 + Decimal(8).sqrt()) ** 7)
    return _round(value)


PELL_CONSTANT_BOUND = Decimal("1.00200118")


def pell_closed_form(q: int) -> Decimal:
    """``((2 - sqrt 2) / 4) psi^q`` with ``psi = 3 + sqrt 8``; approximates ``m_{q,q-1}``."""
    with _context():
        return _round((2 - Decimal(2).sqrt()) / 4 * (3 + Decimal(8).sqrt()) ** q)


def multiplicity_closed_form(c: int, n: int) -> Decimal:
    """``c / sqrt(9c^2 - 4) * (alpha^n - alpha^-n)``, ``alpha`` the larger root of ``x^2 - 3cx + 1``."""
    with _context():
        root = Decimal(9 * c * c - 4).sqrt()
        alpha = (3 * c + root) / 2
        return _round(c / root * (alpha ** n - alpha ** -n))


def _round(value: Decimal) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = DIGITS
        return +value


def log_metric(a, b) -> Decimal:
    """``ln(3 |AB|)`` for distinct points, 0 otherwise."""
    a, b = as_point(a), as_point(b)
    if a == b:
        return Decimal(0)
    with _context():
        return _round(Decimal(3 * markov_distance(a, b)).ln())


# ---------------------------------------------------------------------------
# identities and inequalities
# ---------------------------------------------------------------------------

def check_markov_equation(a, b, c) -> tuple[bool, MarkovTriple]:
    """Markov equation for the sides of an empty lattice triangle; the
    triple is ``(|AB|, |BC|, |AC|)``."""
    if not is_empty_triangle(a, b, c):
        raise PreconditionError(f"triangle {a}, {b}, {c} is not an empty lattice triangle")
    triple = MarkovTriple(markov_distance(a, b), markov_distance(b, c),
                          markov_distance(a, c))
    return triple.satisfies_equation, triple


def _ptolemy_sides(a, b, c, d):
    diagonal = markov_distance(a, c) * markov_distance(b, d)
    sides = (markov_distance(a, b) * markov_distance(c, d)
             + markov_distance(a, d) * markov_distance(b, c))
    return diagonal, sides


def check_ptolemy_equality(a, b, c, d) -> bool:
    if not is_empty_convex_quadrilateral(a, b, c, d):
        raise PreconditionError("quadrilateral is not convex and lattice-empty")
    diagonal, sides = _ptolemy_sides(a, b, c, d)
    return diagonal == sides


def check_ptolemy_inequality(a, b, c, d) -> tuple[bool, int]:
    """Returns ``(|AC||BD| >= |AB||CD| + |AD||BC|, LHS - RHS)``."""
    if not is_strictly_convex((a, b, c, d)):
        raise PreconditionError("quadrilateral is not strictly convex in the given order")
    diagonal, sides = _ptolemy_sides(a, b, c, d)
    return diagonal >= sides, diagonal - sides


def check_additive_inequality(q: int, p: int, i: int = 1) -> bool:
    """``m_{q+1,p} >= m_{q,p} + m_{q+1,p-1}`` for ``i = 1``; the binomial
    iterate ``m_{q+i,p+i} >= sum_j C(i,j) m_{q+j,p+i-j}`` for ``i > 1``."""
    if not 0 <= p <= q or i < 1:
        raise PreconditionError(f"need 0 <= p <= q and i >= 1, got q={q}, p={p}, i={i}")
    if i == 1:
        return m(q + 1, p) >= m(q, p) + m(q + 1, p - 1)
    bound = sum(comb(i, j) * m(q + j, p + i - j) for j in range(i + 1))
    return m(q + i, p + i) >= bound


class AignerResult(NamedTuple):
    num: bool
    den: bool
    sum: Optional[bool]


def check_aigner(q: int, p: int, i: int = 1) -> AignerResult:
    """Constant numerator, denominator and sum comparisons with step ``i``.

    ``sum`` is ``None`` when ``p < i`` (the step would leave the quadrant).
    """
    if not 0 <= p <= q or i < 1:
        raise PreconditionError(f"need 0 <= p <= q and i >= 1, got q={q}, p={p}, i={i}")
    here = m(q, p)
    total = here < m(q + i, p - i) if p >= i else None
    return AignerResult(here < m(q + i, p), here < m(q, p + i), total)


class LogTriangleResult(NamedTuple):
    holds: bool
    equality: bool


def check_log_triangle(a, b, c) -> LogTriangleResult:
    """``3 |AB| |BC| >= |AC|``; equivalently ``d(A,B) + d(B,C) >= d(A,C)``
    for ``d = ln(3 |.|)``."""
    a, b, c = as_point(a), as_point(b), as_point(c)
    if a == b or b == c or a == c:
        raise PreconditionError("points must be pairwise distinct")
    lhs = 3 * markov_distance(a, b) * markov_distance(b, c)
    rhs = markov_distance(a, c)
    return LogTriangleResult(lhs >= rhs, lhs == rhs)


def parallelogram_coefficients(o, e, f, f_prime) -> Optional[tuple[Fraction, Fraction]]:
    """Solve ``F' - F = s (O - E) + t (F - O)``; None if O, E, F are colinear."""
    o, e, f, f_prime = map(as_point, (o, e, f, f_prime))
    u, v, w = o - e, f - o, f_prime - f
    det = cross(u, v)
    if det == 0:
        return None
    return Fraction(cross(w, v), det), Fraction(cross(u, w), det)


def parallelogram_auxiliary_convex(o, e, f, f_prime) -> bool:
    """Whether ``O, O', F', E'`` (``O' = O + F' - F``) is strictly convex.

    In the basis ``(E - O, F - O)`` these points are ``(0,0), (-s,t),
    (-s,t+1), (1-s,t)``, convex exactly when ``s < t + 1``.  The comparison
    follows from the Ptolemy inequality on that quadrilateral; with
    ``s >= t + 1`` it can fail.
    """
    coeffs = parallelogram_coefficients(o, e, f, f_prime)
    return coeffs is not None and coeffs[0] < coeffs[1] + 1


def check_parallelogram(o, e, f, f_prime) -> bool:
    """``|OE| |OF'| >= |OE'| |OF|`` where ``E' = E + (F' - F)``.

    Only guaranteed when :func:`parallelogram_auxiliary_convex` holds;
    e.g. ``O=(3,-2), E=(-2,-4), F=(-3,-4), F'=(6,0)`` (``s=3, t=1``) fails.
    """
    coeffs = parallelogram_coefficients(o, e, f, f_prime)
    if coeffs is None or not (coeffs[0] > 0 and coeffs[1] > 0):
        raise PreconditionError("F' - F must be s*EO + t*OF with s, t > 0 and O, E, F not colinear")
    o, e, f, f_prime = map(as_point, (o, e, f, f_prime))
    e_prime = e + (f_prime - f)
    return (markov_distance(o, e) * markov_distance(o, f_prime)
            >= markov_distance(o, e_prime) * markov_distance(o, f))


class ShortestPathResult(NamedTuple):
    length: int
    distance: int
    holds: bool
    equality: bool


def check_shortest_path(a, waypoints, b) -> ShortestPathResult:
    """Compare a taut peg path's length with the Markov distance of its ends."""
    seq = peg_path_crossing_sequence(a, waypoints, b)
    length = count_matchings_fast(build_snake_graph(seq))
    distance = markov_distance(a, b)
    return ShortestPathResult(length, distance, length >= distance, length == distance)


# ---------------------------------------------------------------------------
# scans along lines
# ---------------------------------------------------------------------------

class DomainFilter(str, enum.Enum):
    FAREY = "farey"
    ALL = "all"

    def admits(self, x: int, y: int) -> bool:
        if self is DomainFilter.FAREY:
            return 1 <= y < x and gcd(x, y) == 1
        return (x, y) != (0, 0)


class Verdict(str, enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    NON_MONOTONIC = "non-monotonic"
    TRIVIAL = "trivial"        # a single point
    EMPTY_LINE = "empty-line"  # no admissible point


def monotonicity(values) -> tuple[Verdict, Optional[tuple[int, ...]]]:
    """Verdict on a sequence plus the indices of a witness when non-monotonic."""
    values = list(values)
    if not values:
        return Verdict.EMPTY_LINE, None
    if len(values) == 1:
        return Verdict.TRIVIAL, None
    steps = [(b > a) - (b < a) for a, b in zip(values, values[1:])]
    if all(s > 0 for s in steps):
        return Verdict.INCREASING, None
    if all(s < 0 for s in steps):
        return Verdict.DECREASING, None
    for k in range(len(steps) - 1):
        if steps[k] != steps[k + 1] or steps[k] == 0:
            return Verdict.NON_MONOTONIC, (k, k + 1, k + 2)
    return Verdict.NON_MONOTONIC, (0, 1)  # two equal values


@dataclass
class ScanReport:
    slope: Fraction
    intercept: Fraction
    points: list[tuple[LatticePoint, int]]
    verdict: Verdict
    witness: Optional[tuple[int, ...]] = None  # x coordinates
    domain_filter: DomainFilter = DomainFilter.FAREY

    @property
    def increases(self) -> bool:
        """Increasing, vacuously so for fewer than two points."""
        return self.verdict in (Verdict.INCREASING, Verdict.TRIVIAL, Verdict.EMPTY_LINE)

    @property
    def decreases(self) -> bool:
        return self.verdict in (Verdict.DECREASING, Verdict.TRIVIAL, Verdict.EMPTY_LINE)

    def to_csv(self) -> str:
        lines = ["x,y,m_value"]
        lines += [f"{pt.x},{pt.y},{value}" for pt, value in self.points]
        tail = f"# verdict={self.verdict.value}"
        if self.witness:
            tail += " witness=" + ";".join(map(str, self.witness))
        if self.domain_filter is DomainFilter.ALL:
            tail += " domain=all-lattice (generalized m, beyond the Markov domain)"
        return "\n".join(lines + [tail]) + "\n"

    def to_json(self) -> str:
        return json.dumps({
            "slope": str(self.slope),
            "intercept": str(self.intercept),
            "domain": self.domain_filter.value,
            "points": [{"x": pt.x, "y": pt.y, "m": str(value)} for pt, value in self.points],
            "verdict": self.verdict.value,
            "witness": list(self.witness) if self.witness else None,
        })


def _scan_points(slope: Fraction, intercept: Fraction, x_min: int, x_max: int,
                 domain_filter: DomainFilter) -> list[LatticePoint]:
    points = []
    for x in range(x_min, x_max + 1):
        y = slope * x + intercept
        if y.denominator == 1 and domain_filter.admits(x, int(y)):
            points.append(LatticePoint(x, int(y)))
    return points


def scan_line(slope, intercept, x_min: int, x_max: int,
              domain_filter: DomainFilter = DomainFilter.FAREY) -> ScanReport:
    """Markov numbers at the lattice points of ``y = slope*x + intercept``."""
    if x_min > x_max:
        raise PreconditionError(f"empty x-range [{x_min}, {x_max}]")
    slope, intercept = Fraction(slope), Fraction(intercept)
    domain_filter = DomainFilter(domain_filter)
    points = [(pt, m(pt.x, pt.y)) for pt in
              _scan_points(slope, intercept, x_min, x_max, domain_filter)]
    verdict, idx = monotonicity(value for _, value in points)
    witness = tuple(points[k][0].x for k in idx) if idx else None
    return ScanReport(slope, intercept, points, verdict, witness, domain_filter)


def lines_through_domain(slope, x_max: int) -> list[Fraction]:
    """Intercepts of every line of the given slope meeting the Markov domain
    at some point with ``x <= x_max``."""
    slope = Fraction(slope)
    intercepts = set()
    for x in range(2, x_max + 1):
        for y in range(1, x):
            if gcd(x, y) == 1:
                intercepts.add(y - slope * x)
    return sorted(intercepts)


# ---------------------------------------------------------------------------
# neighbourhoods
# ---------------------------------------------------------------------------

class Cell(str, enum.Enum):
    SMALLER = "smaller"
    LARGER = "larger"
    EQUAL = "equal"
    CENTER = "center"
    OUT = "out"


@dataclass
class RegionMap:
    center: LatticePoint
    radius: int
    cells: dict[LatticePoint, Cell] = field(default_factory=dict)
    domain_filter: DomainFilter = DomainFilter.FAREY

    def equal_points(self) -> list[LatticePoint]:
        return [pt for pt, cell in self.cells.items() if cell is Cell.EQUAL]

    def to_csv(self) -> str:
        rows = ["x,y,class"] + [f"{pt.x},{pt.y},{cell.value}"
                                for pt, cell in sorted(self.cells.items())]
        return "\n".join(rows) + "\n"

    def to_json(self) -> str:
        return json.dumps([{"x": pt.x, "y": pt.y, "class": cell.value}
                           for pt, cell in sorted(self.cells.items())])


def classify_neighborhood(center, radius: int,
                          domain_filter: DomainFilter = DomainFilter.FAREY) -> RegionMap:
    """Compare ``m`` at every point within Chebyshev distance ``radius`` of
    ``center`` with ``m`` at the center.

    Points outside the chosen domain are marked ``out``; the default domain
    is the set of coprime ``(q, p)`` with ``1 <= p < q``.
    """
    center = as_point(center)
    if radius < 1:
        raise PreconditionError("radius must be >= 1")
    if center.x < 0 or center.y < 0 or center == (0, 0):
        raise PreconditionError("center must lie in the first quadrant")
    domain_filter = DomainFilter(domain_filter)
    reference = m(center.x, center.y)
    region = RegionMap(center, radius, domain_filter=domain_filter)
    for x in range(center.x - radius, center.x + radius + 1):
        for y in range(center.y - radius, center.y + radius + 1):
            pt = LatticePoint(x, y)
            if pt == center:
                cell = Cell.CENTER
            elif not domain_filter.admits(x, y):
                cell = Cell.OUT
            else:
                value = m(x, y)
                cell = (Cell.SMALLER if value < reference
                        else Cell.LARGER if value > reference else Cell.EQUAL)
            region.cells[pt] = cell
    return region


# ---------------------------------------------------------------------------
# ratio sequences
# ---------------------------------------------------------------------------

@dataclass
class RatioReport:
    parameter: int
    ratios: list[tuple[int, Fraction]]
    target: Decimal
    monotone_weakly_decreasing: bool

    @property
    def samples(self) -> list[tuple[int, Decimal]]:
        return [(q, to_decimal(r)) for q, r in self.ratios]

    @property
    def approaches_target(self) -> bool:
        """The last sample is closer to the target than the first."""
        target = Fraction(self.target)
        first, last = self.ratios[0][1], self.ratios[-1][1]
        return abs(last - target) < abs(first - target)

    def to_csv(self) -> str:
        return "q,ratio_60digits\n" + "".join(f"{q},{r}\n" for q, r in self.samples)


def _weakly_decreasing(ratios) -> bool:
    return all(a >= b for (_, a), (_, b) in zip(ratios, ratios[1:]))


def ratio_fibonacci_limit(a: int, q_min: int, q_max: int) -> RatioReport:
    """Samples ``m_{q,a} / m_{q+a-2,1}`` for ``q`` coprime to ``a``."""
    if not 3 <= a <= 7:
        raise PreconditionError(f"a must be in [3, 7], got {a}")
    if q_min <= a:
        raise PreconditionError(f"q_min must exceed a={a}")
    ratios = [(q, Fraction(m(q, a), m(q + a - 2, 1)))
              for q in range(q_min, q_max + 1) if gcd(q, a) == 1]
    if not ratios:
        raise PreconditionError("no admissible q in range")
    return RatioReport(a, ratios, fibonacci_limit_target(a), _weakly_decreasing(ratios))


@dataclass
class PellBoundReport(RatioReport):
    constant: Decimal = Decimal(0)
    consequence: list[tuple[int, int, bool]] = field(default_factory=list)

    @property
    def constant_exceeds_bound(self) -> bool:
        return self.constant > PELL_CONSTANT_BOUND

    @property
    def consequence_holds(self) -> bool:
        return all(ok for _, _, ok in self.consequence)


def ratio_pell_bound(q_min: int, q_max: int) -> PellBoundReport:
    """Samples ``m_{q+7,q-9} / m_{q,q-1}`` and checks ``m_{q,p} < m_{q+7,p-8}``
    for every ``1 <= p < q`` with ``q`` in range."""
    if q_min < 11:
        raise PreconditionError(f"q_min must be >= 11, got {q_min}")
    if q_max < q_min:
        raise PreconditionError("empty range")
    ratios = [(q, Fraction(m(q + 7, q - 9), m(q, q - 1))) for q in range(q_min, q_max + 1)]
    consequence = [(q, p, m(q, p) < m(q + 7, p - 8))
                   for q in range(q_min, q_max + 1) for p in range(1, q)]
    constant = pell_constant()
    return PellBoundReport(0, ratios, constant, _weakly_decreasing(ratios),
                           constant=constant, consequence=consequence)
