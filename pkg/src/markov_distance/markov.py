"""Markov distance between lattice points and the Markov numbers it indexes.

``markov_distance(A, B)`` is the number of perfect matchings of the snake
graph of the left deformation of the segment ``AB``.  With ``A`` at the
origin and ``B = (q, p)`` coprime it is the Markov number of slope ``p/q``;
for arbitrary ``(q, p)`` it defines the generalized numbers ``m_{q,p}``.

Independent routes to the same numbers live here too: descent in the
Stern-Brocot tree using the exchange relation of the Markov tree, the
Chebyshev-type recurrence along multiples of a primitive vector, and the
Fibonacci and Pell sequences.
"""
from __future__ import annotations

import os
import random
import threading
from dataclasses import dataclass
from math import gcd
from pathlib import Path

from .lattice import Side, as_point, deformed_crossing_sequence
from .snake import build_snake_graph, count_matchings_fast


class DomainError(ValueError):
    pass


class CacheValidationError(RuntimeError):
    pass


def canonical_key(dx: int, dy: int) -> tuple[int, int]:
    """Representative of ``(dx, dy)`` under negation and transposition.

    The distance only depends on ``B - A`` up to these symmetries: negation
    swaps the endpoints and transposition maps the triangulation to itself
    with labels 1 and 2 exchanged.
    """
    return max((dx, dy), (-dx, -dy), (dy, dx), (-dy, -dx))


def _distance_uncached(dx: int, dy: int) -> int:
    seq = deformed_crossing_sequence((0, 0), (dx, dy), Side.LEFT)
    return count_matchings_fast(build_snake_graph(seq))


class DistanceCache:
    """Thread-safe memo of Markov distances keyed by canonical difference."""

    def __init__(self):
        self._values: dict[tuple[int, int], int] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._values)

    def __contains__(self, key):
        return key in self._values

    def get(self, dx: int, dy: int) -> int:
        key = canonical_key(dx, dy)
        value = self._values.get(key)
        if value is None:
            value = _distance_uncached(*key)
            with self._lock:
                self._values.setdefault(key, value)
        return value

    def items(self):
        return sorted(self._values.items())

    def clear(self):
        with self._lock:
            self._values.clear()

    def save(self, path) -> None:
        """Write one ``dx,dy,value`` record per line."""
        lines = [f"{dx},{dy},{value}\n" for (dx, dy), value in self.items()]
        Path(path).write_text("".join(lines), encoding="utf-8")

    def load(self, path, rng: random.Random | None = None) -> int:
        """Merge records from ``path``; one random record is recomputed.

        Returns the number of records read.  Raises
        :class:`CacheValidationError` if the spot check disagrees.
        """
        records = {}
        text = Path(path).read_text(encoding="utf-8")
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line:
                continue
            try:
                dx, dy, value = (int(part) for part in line.split(","))
            except ValueError:
                raise CacheValidationError(f"{path}:{lineno}: malformed record {line!r}")
            records[canonical_key(dx, dy)] = value
        if records:
            rng = rng or random.Random()
            key = rng.choice(sorted(records))
            expected = _distance_uncached(*key)
            if records[key] != expected:
                raise CacheValidationError(
                    f"{path}: cached |{key}| = {records[key]}, recomputed {expected}")
        with self._lock:
            self._values.update(records)
        return len(records)


DEFAULT_CACHE = DistanceCache()


def cache_from_environment(path=None) -> DistanceCache:
    """The default cache, preloaded from ``path`` or ``$MARKOV_CACHE`` if set."""
    path = os.environ.get("MARKOV_CACHE") or path
    if path and Path(path).exists():
        DEFAULT_CACHE.load(path)
    return DEFAULT_CACHE


def markov_distance(a, b, cache: DistanceCache | None = DEFAULT_CACHE) -> int:
    a, b = as_point(a), as_point(b)
    if a == b:
        return 0
    dx, dy = b.x - a.x, b.y - a.y
    if cache is None:
        return _distance_uncached(dx, dy)
    return cache.get(dx, dy)


def m(q: int, p: int, cache: DistanceCache | None = DEFAULT_CACHE) -> int:
    """Generalized Markov number ``m_{q,p} = |O (q, p)|``."""
    return markov_distance((0, 0), (q, p), cache)


def _check_index(p: int, q: int, allow_zero: bool) -> None:
    if not (isinstance(p, int) and isinstance(q, int)):
        raise DomainError("p and q must be integers")
    if q < 1:
        raise DomainError(f"q must be >= 1, got q={q}")
    lo = 0 if allow_zero else 1
    if not lo <= p <= q:
        raise DomainError(f"p must satisfy {lo} <= p <= q, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise DomainError(f"p/q must be reduced, got {p}/{q}")


def markov_number(p: int, q: int, cache: DistanceCache | None = DEFAULT_CACHE) -> int:
    """The Markov number ``m_{p/q}`` computed from the snake graph of the segment."""
    _check_index(p, q, allow_zero=False)
    return markov_distance((0, 0), (q, p), cache)


def stern_brocot_oracle(p: int, q: int) -> int:
    """``m_{p/q}`` by descending the Stern-Brocot tree.

    The tree is walked with a triple of fractions ``(left, middle, right)``
    whose Markov numbers form a Markov triple; each step replaces the triple
    by ``(left, mediant(left, middle), middle)`` or
    ``(middle, mediant(middle, right), right)`` and the new number is
    ``3 * product of its two neighbours - the dropped one``.
    """
    _check_index(p, q, allow_zero=True)
    if (p, q) == (0, 1):
        return 1
    if (p, q) == (1, 1):
        return 2
    left, middle, right = ((0, 1), 1), ((1, 2), 5), ((1, 1), 2)
    while True:
        (mp, mq), mv = middle
        if (mp, mq) == (p, q):
            return mv
        (lp, lq), lv = left
        (rp, rq), rv = right
        if p * mq < mp * q:
            new = ((lp + mp, lq + mq), 3 * lv * mv - rv)
            left, middle, right = left, new, middle
        else:
            new = ((mp + rp, mq + rq), 3 * mv * rv - lv)
            left, middle, right = middle, new, right


def chebyshev_multiples(f1: int, n: int) -> list[int]:
    """``[f_0, ..., f_n]`` with ``f_0 = 0``, ``f_1 = f1``, ``f_k = 3 f1 f_{k-1} - f_{k-2}``."""
    values = [0, f1]
    for _ in range(2, n + 1):
        values.append(3 * f1 * values[-1] - values[-2])
    return values[: n + 1]


def multiplicity_value(q: int, p: int, cache: DistanceCache | None = DEFAULT_CACHE) -> int:
    """``m_{q,p}`` from the primitive value and the multiplicity recurrence."""
    if (q, p) == (0, 0):
        raise DomainError("(q, p) = (0, 0) has no primitive direction")
    g = gcd(q, p)
    f1 = markov_distance((0, 0), (q // g, p // g), cache)
    return chebyshev_multiples(f1, g)[g]


def classical_value(kind: str, n: int) -> int:
    """``n``-th Fibonacci (``kind="fibonacci"``) or Pell (``kind="pell"``) number."""
    if n < 0:
        raise DomainError(f"index must be non-negative, got {n}")
    kind = kind.lower()
    if kind == "fibonacci":
        coeff = 1
    elif kind == "pell":
        coeff = 2
    else:
        raise DomainError(f"unknown sequence {kind!r}; use 'fibonacci' or 'pell'")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, coeff * b + a
    return a


@dataclass(frozen=True)
class MarkovTriple:
    a: int
    b: int
    c: int

    @property
    def satisfies_equation(self) -> bool:
        return self.a ** 2 + self.b ** 2 + self.c ** 2 == 3 * self.a * self.b * self.c

    def __iter__(self):
        return iter((self.a, self.b, self.c))
