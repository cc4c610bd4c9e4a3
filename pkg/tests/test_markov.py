from __future__ import annotations

import random
from decimal import Decimal
from math import gcd

import pytest
from hypothesis import given, strategies as st

from markov_distance.markov import (
    CacheValidationError, DistanceCache, DomainError, MarkovTriple, canonical_key,
    chebyshev_multiples, classical_value, m, markov_distance, markov_number,
    multiplicity_value, stern_brocot_oracle,
)
from markov_distance.relations import multiplicity_closed_form

coord = st.integers(-6, 6)
point = st.tuples(coord, coord)


def test_distance_examples():
    assert markov_distance((0, 0), (2, 1)) == 5
    assert markov_distance((0, 0), (3, 0)) == 8
    assert markov_distance((1, 1), (1, 1)) == 0


def test_markov_number_examples():
    assert markov_number(2, 3) == 29
    assert markov_number(3, 5) == 433
    assert markov_number(1, 24) == 7778742049
    assert markov_number(1, 1) == 2


@pytest.mark.parametrize("p,q,msg", [
    (2, 4, "p/q must be reduced"),
    (0, 3, "p must satisfy"),
    (4, 3, "p must satisfy"),
    (1, 0, "q must be >= 1"),
])
def test_markov_number_domain(p, q, msg):
    with pytest.raises(DomainError, match=msg):
        markov_number(p, q)


def test_oracle_examples():
    assert stern_brocot_oracle(1, 3) == 13
    assert stern_brocot_oracle(2, 3) == 29
    assert stern_brocot_oracle(13, 14) == 7645370045
    assert stern_brocot_oracle(0, 1) == 1 and stern_brocot_oracle(1, 1) == 2
    with pytest.raises(DomainError):
        stern_brocot_oracle(3, 6)


def test_oracle_agreement_q_le_20():
    cases = [(p, q) for q in range(2, 21) for p in range(1, q) if gcd(p, q) == 1]
    for p, q in cases:
        assert markov_number(p, q) == stern_brocot_oracle(p, q)


def test_multiplicity_examples():
    assert multiplicity_value(2, 0) == 3
    assert multiplicity_value(2, 2) == 12
    assert multiplicity_value(4, 2) == 75
    with pytest.raises(DomainError):
        multiplicity_value(0, 0)


def test_multiplicity_sweep():
    for q in range(9):
        for p in range(q + 1):
            if (q, p) != (0, 0):
                assert multiplicity_value(q, p) == m(q, p, cache=None)


@pytest.mark.parametrize("c", [1, 2, 5])
def test_closed_form(c):
    exact = chebyshev_multiples(c, 8)
    for n, value in enumerate(exact):
        approx = multiplicity_closed_form(c, n)
        assert approx.to_integral_value() == value
        assert abs(approx - value) < Decimal("1e-45")


def test_classical_examples():
    assert classical_value("fibonacci", 9) == 34 == markov_number(1, 4)
    assert classical_value("pell", 5) == 29 == markov_number(2, 3)
    assert classical_value("pell", 7) == 169 == markov_number(3, 4)
    with pytest.raises(DomainError):
        classical_value("lucas", 3)


def test_fibonacci_and_pell_identities():
    for q in range(2, 13):
        assert markov_number(1, q) == classical_value("fibonacci", 2 * q + 1)
    for n in range(1, 11):
        assert markov_number(n, n + 1) == classical_value("pell", 2 * n + 1)


@given(point, point)
def test_symmetry(a, b):
    assert markov_distance(a, b, cache=None) == markov_distance(b, a, cache=None)


@given(point, point, point)
def test_translation_invariance(a, b, v):
    shifted = markov_distance((a[0] + v[0], a[1] + v[1]), (b[0] + v[0], b[1] + v[1]), None)
    assert markov_distance(a, b, None) == shifted


def test_transpose_symmetry():
    for q in range(11):
        for p in range(11):
            if (q, p) != (0, 0):
                assert m(q, p, cache=None) == m(p, q, cache=None)


def test_value_zero_only_on_diagonal():
    for x in range(-3, 4):
        for y in range(-3, 4):
            assert (markov_distance((0, 0), (x, y), None) == 0) == ((x, y) == (0, 0))


def test_cache_matches_uncached():
    cache = DistanceCache()
    for x in range(-7, 8):
        for y in range(-7, 8):
            if (x, y) != (0, 0):
                assert markov_distance((1, 2), (1 + x, 2 + y), cache) == m(x, y, cache=None)
    assert canonical_key(2, -5) == canonical_key(-5, 2) == canonical_key(-2, 5)


def test_cache_persistence(tmp_path):
    cache = DistanceCache()
    for x in range(1, 6):
        cache.get(x, 2)
    path = tmp_path / "cache.txt"
    cache.save(path)
    other = DistanceCache()
    assert other.load(path, random.Random(0)) == len(cache)
    assert other.items() == cache.items()


def test_cache_rejects_corrupt_record(tmp_path):
    path = tmp_path / "cache.txt"
    path.write_text("2,1,6\n")
    with pytest.raises(CacheValidationError):
        DistanceCache().load(path)
    path.write_text("2,1\n")
    with pytest.raises(CacheValidationError):
        DistanceCache().load(path)


def test_markov_triple():
    assert MarkovTriple(1, 2, 5).satisfies_equation
    assert not MarkovTriple(1, 2, 6).satisfies_equation
    assert tuple(MarkovTriple(2, 5, 29)) == (2, 5, 29)
