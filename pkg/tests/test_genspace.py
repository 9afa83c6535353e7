from collections import Counter
from fractions import Fraction
from math import comb, factorial

import numpy as np
import pytest
from scipy.stats import chi2

from ordtwins import (
    BudgetExceededError,
    MatchingError,
    OrderedMatching,
    SeededSource,
    count_matchings,
    enumerate_matchings,
    expected_pair_count,
    expected_twin_count,
    random_matching,
    to_word,
)
from ordtwins.oracle import count_twin_pairs


def test_random_matching_single_edge():
    for r in (2, 3, 5):
        assert random_matching(1, r, SeededSource(99)).edges == (tuple(range(1, r + 1)),)


def test_random_matching_deterministic():
    a = random_matching(50, 3, SeededSource(12, 4))
    b = random_matching(50, 3, SeededSource(12, 4))
    c = random_matching(50, 3, SeededSource(12, 5))
    assert a == b
    assert a != c
    assert a.is_full


def test_tuple_stream_keys_are_independent():
    assert random_matching(30, 2, SeededSource(1, (0, 1))) != random_matching(30, 2, SeededSource(1, (1, 0)))


def test_random_matching_rejects():
    with pytest.raises(MatchingError):
        random_matching(0, 2, SeededSource(0))
    with pytest.raises(MatchingError):
        random_matching(3, 1, SeededSource(0))


@pytest.mark.parametrize("n, r", [(2, 2), (2, 3)])
def test_generator_uniformity(n, r):
    rng = SeededSource(2024, (n, r)).generator()
    samples = 100_000
    counts = Counter(to_word(random_matching(n, r, rng)) for _ in range(samples))
    total = count_matchings(n, r)
    assert len(counts) == total
    expected = samples / total
    stat = sum((c - expected) ** 2 / expected for c in counts.values())
    assert stat < chi2.ppf(0.999, total - 1)


def test_count_matchings_examples():
    assert count_matchings(1, 4) == 1
    assert count_matchings(2, 3) == 10
    assert count_matchings(3, 2) == 15
    assert count_matchings(0, 3) == 1
    with pytest.raises(MatchingError):
        count_matchings(-1, 2)


def test_count_matchings_recurrence():
    for r in range(2, 6):
        for n in range(1, 21):
            assert count_matchings(n, r) == comb(r * n - 1, r - 1) * count_matchings(n - 1, r)
            assert count_matchings(n, r) == factorial(r * n) // (factorial(r) ** n * factorial(n))


def test_enumerate_matchings_examples():
    assert [to_word(m) for m in enumerate_matchings(2, 2)] == ["AABB", "ABAB", "ABBA"]
    assert [to_word(m) for m in enumerate_matchings(1, 3)] == ["AAA"]
    ms = list(enumerate_matchings(3, 2))
    assert len(ms) == 15 == len(set(ms))


@pytest.mark.parametrize("n, r", [(4, 2), (5, 2), (3, 3), (2, 4)])
def test_enumeration_is_exhaustive_and_valid(n, r):
    ms = list(enumerate_matchings(n, r))
    assert len(ms) == len(set(ms)) == count_matchings(n, r)
    for m in ms:
        assert OrderedMatching(m.rank, m.edges) == m
        assert m.is_full
    assert [m.edges for m in ms] == sorted(m.edges for m in ms)


def test_enumeration_budget():
    with pytest.raises(BudgetExceededError):
        next(enumerate_matchings(12, 2, cap=10_000))


def test_expected_twin_count_examples():
    assert expected_twin_count(2, 2, 1) == 1
    assert expected_twin_count(2, 2, 2) == 0
    assert expected_twin_count(6, 2, 2) == 15
    with pytest.raises(MatchingError):
        expected_twin_count(4, 2, -1)


def test_expected_twin_count_forms_agree():
    for n in range(1, 13):
        for r in range(2, 5):
            for k in range(0, n // 2 + 1):
                assert expected_twin_count(n, r, k) == expected_twin_count(n, r, k, form="multinomial")


@pytest.mark.parametrize("n, r", [(2, 2), (3, 2), (4, 2), (3, 3)])
def test_expected_twin_count_matches_enumeration(n, r):
    ms = list(enumerate_matchings(n, r))
    for k in range(1, n // 2 + 1):
        avg = Fraction(sum(count_twin_pairs(m, k) for m in ms), len(ms))
        assert avg == expected_twin_count(n, r, k)


def _pair_count_brute(m, a):
    """Pairs of edges whose vertices sit one per block in a common block set."""
    sig = []
    for e in m.edges:
        blocks = tuple((v - 1) // a for v in e)
        sig.append(blocks if len(set(blocks)) == len(blocks) else None)
    return sum(
        1
        for i in range(len(sig))
        for j in range(i + 1, len(sig))
        if sig[i] is not None and sig[i] == sig[j]
    )


def test_expected_pair_count_examples():
    assert expected_pair_count(3, 2, 6) == 0
    assert expected_pair_count(2, 2, 2) == Fraction(2, 3)
    ms = list(enumerate_matchings(2, 2))
    assert Fraction(sum(_pair_count_brute(m, 2) for m in ms), len(ms)) == Fraction(2, 3)
    with pytest.raises(MatchingError):
        expected_pair_count(3, 2, 4)


@pytest.mark.parametrize("n, r, a", [(4, 2, 2), (3, 3, 3), (4, 3, 2), (6, 2, 3)])
def test_expected_pair_count_matches_enumeration(n, r, a):
    ms = list(enumerate_matchings(n, r))
    avg = Fraction(sum(_pair_count_brute(m, a) for m in ms), len(ms))
    assert avg == expected_pair_count(n, r, a)


def test_shuffle_is_a_permutation():
    from ordtwins.genspace import random_permutation

    rng = np.random.default_rng(0)
    for m in (0, 1, 2, 17):
        assert sorted(random_permutation(m, rng)) == list(range(1, m + 1))
