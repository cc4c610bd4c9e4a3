"""Verification suites: sweeps and sampled checks over the relations.

Each suite returns a :class:`VerifyOutcome`.  Sampling draws from a
``random.Random(seed)`` so a suite run is reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from itertools import combinations
from math import gcd

from .lattice import LatticePoint, Side, cross, is_empty_triangle, is_strictly_convex
from .markov import (
    chebyshev_multiples, classical_value, m, markov_number, multiplicity_value,
    stern_brocot_oracle,
)
from .relations import (
    PELL_CONSTANT_BOUND, Cell, Verdict, check_additive_inequality,
    check_aigner, check_log_triangle, check_markov_equation, check_parallelogram,
    check_ptolemy_equality, check_ptolemy_inequality, check_shortest_path,
    classify_neighborhood, lines_through_domain, monotonicity,
    multiplicity_closed_form, pell_closed_form, ratio_fibonacci_limit,
    ratio_pell_bound, scan_line,
)

SUITES = ("identities", "inequalities", "scans", "ratios")

INCREASING_SLOPES = tuple(map(Fraction, ("0", "1", "-1", "-8/7", "-9/8", "1/2")))
DECREASING_SLOPES = tuple(map(Fraction, ("-5/4", "-4/3", "-3/2", "-2")))


@dataclass
class VerifyOutcome:
    suite: str
    cases_run: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, case_id: str, ok: bool, expected="", actual="") -> bool:
        self.cases_run += 1
        if not ok:
            self.failures.append((case_id, str(expected), str(actual)))
        return ok

    def merge(self, other: "VerifyOutcome") -> None:
        self.cases_run += other.cases_run
        self.failures.extend(other.failures)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.suite}: {status} ({self.cases_run} cases, {len(self.failures)} failures)"

    def as_dict(self) -> dict:
        return {"suite": self.suite, "cases_run": self.cases_run,
                "failures": [list(f) for f in self.failures]}


# ---------------------------------------------------------------------------
# configuration enumerators
# ---------------------------------------------------------------------------

def _grid(lo: int, hi: int) -> list[LatticePoint]:
    return [LatticePoint(x, y) for x in range(lo, hi + 1) for y in range(lo, hi + 1)]


def empty_triangles(max_coord: int):
    """Every empty lattice triangle with vertices in ``[0, max_coord]^2``."""
    for a, b, c in combinations(_grid(0, max_coord), 3):
        if is_empty_triangle(a, b, c):
            yield a, b, c


def empty_convex_quadrilaterals(max_coord: int):
    """Every convex quadrilateral with vertices in ``[0, max_coord]^2`` made of
    two empty triangles glued along a diagonal, in counterclockwise order.

    A set of four points has at most one convex cyclic order, so the vertex
    set identifies the quadrilateral.
    """
    pts = _grid(0, max_coord)
    seen = set()
    for a, c in combinations(pts, 2):
        d_ac = c - a
        right = [p for p in pts if cross(d_ac, p - a) == -1]
        left = [p for p in pts if cross(d_ac, p - a) == 1]
        for b in right:
            for d in left:
                quad = (a, b, c, d)
                key = frozenset(quad)
                if key in seen or not is_strictly_convex(quad):
                    continue
                seen.add(key)
                yield quad


def _random_convex_quad(rng: random.Random, hi: int):
    """Four random points of ``[0, hi]^2`` in convex position, ordered
    counterclockwise; ``None`` if the draw is not in convex position."""
    pts = [LatticePoint(rng.randint(0, hi), rng.randint(0, hi)) for _ in range(4)]
    a, b, c, d = pts
    for order in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
        if is_strictly_convex(order):
            if cross(order[1] - order[0], order[2] - order[1]) < 0:
                order = order[::-1]
            return order
    return None


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def identities_suite(max_coord: int = 7, quad_max_coord: int | None = None,
                     seed: int = 0) -> VerifyOutcome:
    out = VerifyOutcome("identities")
    quad_max_coord = max_coord if quad_max_coord is None else quad_max_coord

    for tri in empty_triangles(max_coord):
        ok, triple = check_markov_equation(*tri)
        out.check(f"markov-equation{tri}", ok, "a^2+b^2+c^2=3abc", tuple(triple))

    for quad in empty_convex_quadrilaterals(quad_max_coord):
        out.check(f"ptolemy-equality{quad}", check_ptolemy_equality(*quad), True, False)

    for q in range(1, 13):
        out.check(f"fibonacci q={q}", m(q, 1) == classical_value("fibonacci", 2 * q + 1),
                  classical_value("fibonacci", 2 * q + 1), m(q, 1))
    for n in range(1, 11):
        out.check(f"pell n={n}", m(n + 1, n) == classical_value("pell", 2 * n + 1),
                  classical_value("pell", 2 * n + 1), m(n + 1, n))

    for q in range(1, 9):
        for p in range(q + 1):
            if (q, p) == (0, 0):
                continue
            for g in range(1, 5):
                direct = m(g * q, g * p)
                out.check(f"multiplicity ({q},{p})x{g}",
                          direct == multiplicity_value(g * q, g * p),
                          direct, multiplicity_value(g * q, g * p))

    for c in (1, 2, 5):
        exact = chebyshev_multiples(c, 8)
        for n in range(9):
            approx = multiplicity_closed_form(c, n)
            out.check(f"closed-form c={c} n={n}", abs(approx - exact[n]) < Decimal("1e-40"),
                      exact[n], approx)

    for q in range(1, 21):
        for p in range(1, q + 1):
            if gcd(p, q) == 1:
                geo, tree = markov_number(p, q), stern_brocot_oracle(p, q)
                out.check(f"oracle {p}/{q}", geo == tree, tree, geo)
    return out


def inequalities_suite(max_coord: int = 7, seed: int = 0, samples: int = 1000) -> VerifyOutcome:
    out = VerifyOutcome("inequalities")
    rng = random.Random(seed)

    drawn = 0
    while drawn < samples:
        quad = _random_convex_quad(rng, 12)
        if quad is None:
            continue
        drawn += 1
        holds, slack = check_ptolemy_inequality(*quad)
        out.check(f"ptolemy-inequality{quad}", holds, "slack >= 0", slack)

    for q in range(0, 9):
        for p in range(0, q + 1):
            for i in (1, 2, 3):
                out.check(f"additive ({q},{p},{i})", check_additive_inequality(q, p, i), True, False)
            for i in (1, 2):
                res = check_aigner(q, p, i)
                out.check(f"aigner ({q},{p},{i})",
                          res.num and res.den and res.sum is not False, True, res)

    for k in range(samples):
        a, b, c = (LatticePoint(rng.randint(-8, 8), rng.randint(-8, 8)) for _ in range(3))
        if len({a, b, c}) < 3:
            continue
        res = check_log_triangle(a, b, c)
        out.check(f"log-triangle {a},{b},{c}", res.holds, True, res)
        d = b - a
        expect_eq = (c - b == d) and gcd(d.x, d.y) == 1
        out.check(f"log-triangle-equality {a},{b},{c}", res.equality == expect_eq,
                  expect_eq, res.equality)
    for _ in range(200):
        a = LatticePoint(rng.randint(-8, 8), rng.randint(-8, 8))
        d = LatticePoint(rng.randint(-4, 4), rng.randint(-4, 4))
        if d == (0, 0) or gcd(d.x, d.y) != 1:
            continue
        res = check_log_triangle(a, a + d, a + d + d)
        out.check(f"log-triangle-primitive-step {a},{d}", res.equality, True, res)

    drawn = 0
    while drawn < samples // 2:
        o = LatticePoint(rng.randint(-4, 4), rng.randint(-4, 4))
        e = LatticePoint(rng.randint(-4, 4), rng.randint(-4, 4))
        f = LatticePoint(rng.randint(-4, 4), rng.randint(-4, 4))
        if cross(o - e, f - o) == 0:
            continue
        # s < t + 1 keeps the auxiliary quadrilateral convex
        t = rng.randint(1, 3)
        s = rng.randint(1, t)
        f_prime = f + (o - e).scaled(s) + (f - o).scaled(t)
        drawn += 1
        out.check(f"parallelogram {o},{e},{f},{f_prime}",
                  check_parallelogram(o, e, f, f_prime), True, False)
    out.check("parallelogram known failure with s >= t + 1",
              not check_parallelogram((3, -2), (-2, -4), (-3, -4), (6, 0)), False, True)

    for a, waypoints, b, equal in (
        ((0, 0), [((1, 0), Side.LEFT)], (2, 0), True),
        ((0, 0), [((1, 1), Side.LEFT)], (2, 1), False),
        ((0, 0), [((1, 0), Side.RIGHT)], (2, 1), False),
        ((0, 0), [], (3, 2), True),
        ((0, 0), [((1, 0), Side.RIGHT)], (2, 0), True),
        ((0, 0), [((2, 1), Side.LEFT), ((3, 1), Side.RIGHT)], (5, 2), False),
    ):
        res = check_shortest_path(a, waypoints, b)
        out.check(f"shortest-path {a}->{b} via {waypoints}",
                  res.holds and res.equality == equal, (True, equal), res)

    for q in range(2, 16):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            region = classify_neighborhood((q, p), 3)
            out.check(f"no-equal-neighbour ({q},{p})", not region.equal_points(),
                      [], region.equal_points())
            nb = LatticePoint(q + 1, p - 1)
            if nb in region.cells and region.cells[nb] is not Cell.OUT:
                out.check(f"neighbour ({q},{p})->{tuple(nb)}",
                          region.cells[nb] is Cell.LARGER, Cell.LARGER, region.cells[nb])
    return out


def _window_verdicts(values, xs, width):
    """Monotonicity verdicts of every window ``[s, s + width]`` of a scanned line."""
    for k, start in enumerate(xs):
        end = start + width
        window = [v for x, v in zip(xs[k:], values[k:]) if x <= end]
        yield start, monotonicity(window)[0]


def scans_suite(max_coord: int = 60, seed: int = 0, width: int = 30,
                increasing=INCREASING_SLOPES, decreasing=DECREASING_SLOPES) -> VerifyOutcome:
    """Every line of the given slopes that meets the domain with ``x <= max_coord``
    is scanned over ``[1, max_coord]``, and every window of the given width
    is classified."""
    out = VerifyOutcome("scans")
    for slopes, good in ((increasing, (Verdict.INCREASING, Verdict.TRIVIAL)),
                         (decreasing, (Verdict.DECREASING, Verdict.TRIVIAL))):
        for slope in slopes:
            for intercept in lines_through_domain(slope, max_coord):
                report = scan_line(slope, intercept, 1, max_coord)
                xs = [pt.x for pt, _ in report.points]
                values = [value for _, value in report.points]
                bad = [s for s, v in _window_verdicts(values, xs, width) if v not in good]
                out.check(f"scan slope={slope} intercept={intercept}", not bad,
                          good[0].value, f"{report.verdict.value} in windows starting {bad[:3]}")

    for slope, intercept, lo, hi, expected in (
        (Fraction(-6, 5), Fraction(149, 5), 14, 24, (7645370045, 6684339842, 7778742049)),
        (Fraction(-7, 6), Fraction(215, 6), 17, 29,
         (1513744654945, 1490542435045, 2076871684802)),
    ):
        report = scan_line(slope, intercept, lo, hi)
        values = tuple(v for _, v in report.points)
        out.check(f"non-monotone witness slope={slope}",
                  values == expected and report.verdict is Verdict.NON_MONOTONIC,
                  expected, values)
    return out


def ratios_suite(max_coord: int = 40, seed: int = 0) -> VerifyOutcome:
    out = VerifyOutcome("ratios")
    q_max = max(max_coord, 12)

    for a in range(3, 8):
        report = ratio_fibonacci_limit(a, a + 1, q_max)
        out.check(f"fibonacci-ratio a={a} weakly decreasing",
                  report.monotone_weakly_decreasing, True, False)
        out.check(f"fibonacci-ratio a={a} approaches target", report.approaches_target,
                  report.target, report.samples[-1][1])
        above = all(r > Fraction(report.target) for _, r in report.ratios)
        out.check(f"fibonacci-ratio a={a} above target", above, True, False)
    three = ratio_fibonacci_limit(3, 4, q_max)
    out.check("fibonacci-ratio a=3 above 9/5",
              all(r > Fraction(9, 5) for _, r in three.ratios), True, False)
    out.check("fibonacci-ratio a=3 first sample 169/89",
              three.ratios[0] == (4, Fraction(169, 89)), (4, "169/89"), three.ratios[0])

    pell = ratio_pell_bound(11, q_max)
    out.check("pell constant > 1.00200118", pell.constant_exceeds_bound,
              f"> {PELL_CONSTANT_BOUND}", pell.constant)
    out.check("pell ratio weakly decreasing", pell.monotone_weakly_decreasing, True, False)
    out.check("pell ratio above constant",
              all(r > Fraction(pell.constant) for _, r in pell.ratios), True, False)
    bad = [(q, p) for q, p, ok in pell.consequence if not ok]
    out.check("m_{q,p} < m_{q+7,p-8}", not bad, [], bad[:5])
    out.check("m_{10,9} < m_{17,1}", m(10, 9) < m(17, 1), (6625109, 9227465), (m(10, 9), m(17, 1)))

    for q in range(8, q_max + 1):
        exact = m(q, q - 1)
        rel = abs(pell_closed_form(q) - exact) / exact
        out.check(f"pell closed form q={q}", rel < Decimal("1e-3"), "< 1e-3", rel)
    return out


def run_suite(name: str, max_coord: int | None = None, seed: int = 0) -> VerifyOutcome:
    """Run one suite or ``all``.  ``max_coord`` overrides the suite's default bound."""
    kwargs = {"seed": seed}
    if max_coord is not None:
        kwargs["max_coord"] = max_coord
    runners = {"identities": identities_suite, "inequalities": inequalities_suite,
               "scans": scans_suite, "ratios": ratios_suite}
    if name == "all":
        total = VerifyOutcome("all")
        for suite in SUITES:
            total.merge(runners[suite](**kwargs))
        return total
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return runners[name](**kwargs)
