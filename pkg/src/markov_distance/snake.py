"""Snake graphs of crossing sequences and their perfect matchings.

A snake graph is a chain of unit square tiles, each glued to the north or
to the east of its predecessor.  The tile for the ``j``-th crossing carries
the crossed label and a sign that alternates along the chain.  Which side
the next tile is glued on follows from the boundary labels of the tile:
for a ``+`` tile with diagonal label ``i`` the north and south edges carry
``i + 1`` and the east and west edges ``i + 2`` (labels taken mod 3 in
``{1, 2, 3}``); a ``-`` tile has the two swapped.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

MAX_BRUTEFORCE_TILES = 24


class InvalidSequenceError(ValueError):
    pass


class SizeLimitError(ValueError):
    pass


class Glue(str, enum.Enum):
    NORTH = "N"
    EAST = "E"

    def __str__(self):
        return self.value


def _shift(label: int, k: int) -> int:
    return (label - 1 + k) % 3 + 1


class Tile(NamedTuple):
    label: int
    sign: int  # +1 or -1

    @property
    def north_label(self) -> int:
        return _shift(self.label, 1 if self.sign > 0 else 2)

    @property
    def east_label(self) -> int:
        return _shift(self.label, 2 if self.sign > 0 else 1)

    def __str__(self):
        return f"{self.label}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class SnakeGraph:
    tiles: tuple[Tile, ...] = ()
    glues: tuple[Glue, ...] = ()

    def __post_init__(self):
        if self.tiles and len(self.glues) != len(self.tiles) - 1:
            raise ValueError("a snake graph with n tiles needs n - 1 glues")
        if not self.tiles and self.glues:
            raise ValueError("an empty snake graph has no glues")

    def __len__(self):
        return len(self.tiles)

    @classmethod
    def from_glues(cls, glues: Iterable) -> "SnakeGraph":
        """An unlabeled snake with the given glue directions (labels are dummies)."""
        glues = tuple(Glue(g) for g in glues)
        tiles = tuple(Tile(3, 1 if k % 2 == 0 else -1) for k in range(len(glues) + 1))
        return cls(tiles, glues)

    def reversed(self) -> "SnakeGraph":
        """The snake rotated by 180 degrees; read backwards, N and E survive."""
        n = len(self.tiles)
        tiles = tuple(Tile(t.label, t.sign if n % 2 else -t.sign)
                      for t in reversed(self.tiles))
        return SnakeGraph(tiles, tuple(reversed(self.glues)))

    def serialize(self) -> str:
        """Text form such as ``3+ E 1- E 3+ N 2- N 3+``."""
        parts: list[str] = []
        for k, tile in enumerate(self.tiles):
            if k:
                parts.append(str(self.glues[k - 1]))
            parts.append(str(tile))
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "SnakeGraph":
        tokens = text.split()
        if not tokens:
            return cls()
        if len(tokens) % 2 == 0:
            raise ValueError(f"malformed snake graph text: {text!r}")
        tiles, glues = [], []
        for k, tok in enumerate(tokens):
            if k % 2:
                glues.append(Glue(tok))
            else:
                if len(tok) != 2 or tok[0] not in "123" or tok[1] not in "+-":
                    raise ValueError(f"malformed tile {tok!r}")
                tiles.append(Tile(int(tok[0]), 1 if tok[1] == "+" else -1))
        return cls(tuple(tiles), tuple(glues))

    def tile_positions(self) -> list[tuple[int, int]]:
        """Lower-left corners of the tiles when laid out in the plane."""
        if not self.tiles:
            return []
        x = y = 0
        out = [(0, 0)]
        for g in self.glues:
            if g is Glue.NORTH:
                y += 1
            else:
                x += 1
            out.append((x, y))
        return out


def third_label(i: int, j: int) -> int:
    return 6 - i - j


def build_snake_graph(seq: Sequence[int]) -> SnakeGraph:
    seq = tuple(seq)
    for i in seq:
        if i not in (1, 2, 3):
            raise InvalidSequenceError(f"label {i} is not in {{1, 2, 3}}")
    for a, b in zip(seq, seq[1:]):
        if a == b:
            raise InvalidSequenceError(f"consecutive equal labels in {seq}")
    tiles = tuple(Tile(lab, 1 if k % 2 == 0 else -1) for k, lab in enumerate(seq))
    glues = []
    for k in range(len(seq) - 1):
        b = third_label(seq[k], seq[k + 1])
        glues.append(Glue.NORTH if tiles[k].north_label == b else Glue.EAST)
    return SnakeGraph(tiles, tuple(glues))


# ---------------------------------------------------------------------------
# perfect matchings
# ---------------------------------------------------------------------------

def count_matchings_fast(graph: SnakeGraph) -> int:
    """Number of perfect matchings, by a two-state transfer over the tiles.

    ``total`` counts matchings of the first ``k`` tiles; ``using_glue`` counts
    those that contain the edge the next tile will be glued along.  Adding a
    tile either matches its two new vertices to each other (any matching of
    the prefix) or to the endpoints of the glue edge (prefix matchings that
    use it).  The next glue edge is the new far edge when the snake goes
    straight, and a side edge of the new tile when it turns.
    """
    n = len(graph.tiles)
    if n == 0:
        return 1
    total, using_glue = 2, 1
    for k in range(1, n):
        new_total = total + using_glue
        if k < n - 1:
            straight = graph.glues[k] == graph.glues[k - 1]
            using_glue = total if straight else using_glue
        total = new_total
    return total


def _materialize(graph: SnakeGraph):
    edges: set[frozenset] = set()
    for x, y in graph.tile_positions():
        corners = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]
        for k in range(4):
            edges.add(frozenset((corners[k], corners[(k + 1) % 4])))
    adjacency: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for e in edges:
        u, v = tuple(e)
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    return adjacency


def count_matchings_bruteforce(graph: SnakeGraph) -> int:
    """Enumerate every perfect matching of the explicit vertex/edge graph."""
    if len(graph.tiles) > MAX_BRUTEFORCE_TILES:
        raise SizeLimitError(
            f"{len(graph.tiles)} tiles exceeds the brute-force limit "
            f"of {MAX_BRUTEFORCE_TILES}")
    adjacency = _materialize(graph)
    order = sorted(adjacency)

    def extend(matched: frozenset) -> int:
        free = next((v for v in order if v not in matched), None)
        if free is None:
            return 1
        count = 0
        for w in adjacency[free]:
            if w not in matched:
                count += extend(matched | {free, w})
        return count

    return extend(frozenset())


# ---------------------------------------------------------------------------
# continued fractions
# ---------------------------------------------------------------------------

def continuant(terms: Sequence[int]) -> int:
    if not terms:
        return 1
    prev, cur = 1, terms[0]
    for a in terms[1:]:
        prev, cur = cur, a * cur + prev
    return cur


@dataclass(frozen=True)
class ContinuedFraction:
    terms: tuple[int, ...]

    def __post_init__(self):
        if not self.terms or any(a < 1 for a in self.terms):
            raise ValueError(f"continued fraction terms must be >= 1: {self.terms}")

    @property
    def numerator(self) -> int:
        return continuant(self.terms)

    @property
    def value(self) -> Fraction:
        v = Fraction(self.terms[-1])
        for a in reversed(self.terms[:-1]):
            v = a + 1 / v
        return v

    def __str__(self):
        head, *tail = self.terms
        return f"[{head}; {', '.join(map(str, tail))}]" if tail else f"[{head}]"


def continued_fraction_of(graph: SnakeGraph) -> ContinuedFraction:
    """Continued fraction whose continuant is the matching count.

    Signs are assigned to the first boundary edge, the glue edges and the
    last boundary edge: a turn keeps the sign, a straight step flips it, and
    each boundary edge copies its neighbour.  The terms are the lengths of
    the maximal runs of equal signs.
    """
    if not graph.tiles:
        raise ValueError("the empty snake graph has no continued fraction")
    signs = [1, 1]
    glues = graph.glues
    for k in range(len(glues) - 1):
        turn = glues[k] != glues[k + 1]
        signs.append(signs[-1] if turn else -signs[-1])
    if glues:
        signs.append(signs[-1])
    terms = []
    run = 1
    for a, b in zip(signs, signs[1:]):
        if a == b:
            run += 1
        else:
            terms.append(run)
            run = 1
    terms.append(run)
    return ContinuedFraction(tuple(terms))
