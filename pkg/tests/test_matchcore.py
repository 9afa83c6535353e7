import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordtwins import (
    MatchingError,
    NotIsomorphicError,
    OrderedMatching,
    Pattern,
    SeededSource,
    TwinsOverlapError,
    TwinsSizeError,
    canonical_form,
    enumerate_matchings,
    enumerate_patterns,
    parse_word,
    pattern_of,
    random_matching,
    symbol_indices,
    to_word,
    verify_twins,
)

matchings = st.builds(
    lambda n, r, seed: random_matching(n, r, SeededSource(seed)),
    st.integers(1, 40),
    st.integers(2, 5),
    st.integers(0, 2**32),
)


def test_parse_word_worked_example():
    m = parse_word("AABCBDBDACCD")
    assert m.rank == 3 and m.size == 4
    assert m.edges == ((1, 2, 9), (3, 5, 7), (4, 10, 11), (6, 8, 12))
    assert m.is_full


def test_parse_word_single_edge():
    assert parse_word("AA").edges == ((1, 2),)


@pytest.mark.parametrize("word", ["AAB", "", "ABC", "AABBB"])
def test_parse_word_rejects(word):
    with pytest.raises(MatchingError):
        parse_word(word)


def test_parse_word_tokens_and_relabel():
    m = parse_word("7 7 x x 7 x")
    assert m.rank == 3
    assert m.edges == ((1, 2, 5), (3, 4, 6))
    assert to_word(m) == "AABBAB"


def test_to_word_examples():
    assert to_word(OrderedMatching.from_edges([(1, 2, 9), (3, 5, 7), (4, 10, 11), (6, 8, 12)])) == "AABCBDBDACCD"
    assert to_word(OrderedMatching.from_edges([(1, 2)])) == "AA"


def test_to_word_numeric_tokens_beyond_26_letters():
    m = OrderedMatching.from_edges([(2 * i + 1, 2 * i + 2) for i in range(30)])
    word = to_word(m)
    assert word.split()[:4] == ["1", "1", "2", "2"]
    assert word.split()[-2:] == ["30", "30"]
    assert parse_word(word) == m


def test_canonical_form_worked_twins():
    m = parse_word("AABCBDBDACCD")
    # letters B, D and A, C
    assert canonical_form(m, [1, 3]) == "AABABB"
    assert canonical_form(m, [0, 2]) == "AABABB"


def test_canonical_form_single_edge():
    m = parse_word("AABCBDBDACCD")
    assert canonical_form(m, [2]) == "AAA"


def test_validation_errors():
    with pytest.raises(MatchingError):
        OrderedMatching(2, ((1, 2), (2, 3)))
    with pytest.raises(MatchingError):
        OrderedMatching(2, ((2, 1),))
    with pytest.raises(MatchingError):
        OrderedMatching(3, ((1, 2),))
    with pytest.raises(MatchingError):
        OrderedMatching(1, ((1,),))


def test_edges_sorted_by_leftmost_vertex():
    m = OrderedMatching(2, ((5, 6), (1, 3), (2, 4)))
    assert m.edges == ((1, 3), (2, 4), (5, 6))


def test_json_roundtrip():
    m = parse_word("AABECBDEEBDACCD")
    data = json.loads(m.to_json())
    assert data["r"] == 3 and data["edges"][0] == [1, 2, 12]
    assert OrderedMatching.from_json(m.to_json()) == m


@pytest.mark.parametrize(
    "e, f, word",
    [((1, 2), (3, 4), "AABB"), ((1, 3), (2, 4), "ABAB"), ((1, 2, 9), (3, 5, 7), "AABBBA")],
)
def test_pattern_of(e, f, word):
    assert pattern_of(e, f) == Pattern(word)


def test_pattern_of_rejects():
    with pytest.raises(MatchingError):
        pattern_of((1, 3), (3, 4))
    with pytest.raises(MatchingError):
        pattern_of((2, 3), (1, 4))


def test_enumerate_patterns_counts():
    assert [p.word for p in enumerate_patterns(2)] == ["AABB", "ABAB", "ABBA"]
    r3 = {p.word for p in enumerate_patterns(3)}
    assert r3 == {
        "AAABBB", "AABABB", "AABBBA", "AABBAB", "ABBBAA",
        "ABBAAB", "ABBABA", "ABAABB", "ABABBA", "ABABAB",
    }
    assert len(enumerate_patterns(4)) == 35
    with pytest.raises(MatchingError):
        enumerate_patterns(1)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_patterns_cover_all_pairs(r):
    known = set(enumerate_patterns(r))
    assert len(known) == len(enumerate_patterns(r))
    for m in enumerate_matchings(2, r):
        assert pattern_of(*m.edges) in known


def test_verify_twins_worked_example():
    word = "AABECBDEEBDACCD"
    m = parse_word(word)
    idx = symbol_indices(word)
    cert = verify_twins(m, [idx["A"], idx["C"]], [idx["B"], idx["D"]])
    assert cert.size == 2
    assert cert.words() == ("AABABB", "AABABB")


def test_verify_twins_errors():
    m = parse_word("AABECBDEEBDACCD")
    assert verify_twins(m, [0], [1]).size == 1
    with pytest.raises(TwinsOverlapError):
        verify_twins(m, [0], [0])
    with pytest.raises(TwinsSizeError):
        verify_twins(m, [0, 2], [1])
    with pytest.raises(NotIsomorphicError):
        verify_twins(parse_word("AABBCDCD"), [0, 1], [2, 3])


def _isomorphic_by_bijection(m, s, t):
    """Independent check: the unique order-preserving map between the vertex
    sets must carry edges onto edges."""
    es = [m.edges[i] for i in s]
    et = [m.edges[i] for i in t]
    vs = sorted(v for e in es for v in e)
    vt = sorted(v for e in et for v in e)
    if len(vs) != len(vt):
        return False
    phi = dict(zip(vs, vt))
    return {tuple(phi[v] for v in e) for e in es} == set(et)


def test_canonical_soundness_small_r2():
    for n in (1, 2, 3):
        for m in enumerate_matchings(n, 2):
            for k in range(1, n + 1):
                subsets = list(combinations(range(n), k))
                for s in subsets:
                    for t in subsets:
                        same = canonical_form(m, s) == canonical_form(m, t)
                        assert same == _isomorphic_by_bijection(m, s, t)
    # across different hosts: full matchings on [2n] are isomorphic iff equal
    for n in (1, 2, 3):
        ms = list(enumerate_matchings(n, 2))
        for a in ms:
            for b in ms:
                assert (canonical_form(a) == canonical_form(b)) == (a == b)


def test_canonical_soundness_random_hosts(matching_of):
    for seed in range(20):
        m = matching_of(6, 3, seed)
        for s, t in combinations(list(combinations(range(6), 2)), 2):
            assert (canonical_form(m, s) == canonical_form(m, t)) == _isomorphic_by_bijection(m, s, t)


@given(matchings)
def test_roundtrip(m):
    assert parse_word(to_word(m)) == m
    assert parse_word(canonical_form(m)) == m.compress()


@given(st.lists(st.integers(1, 10**6), min_size=4, max_size=4, unique=True), st.integers(1, 50))
def test_pattern_invariant_under_order_preserving_relabel(values, shift):
    vals = sorted(values)
    for b_pos in combinations(range(4), 2):
        if 0 in b_pos:
            continue
        e = tuple(v for i, v in enumerate(vals) if i not in b_pos)
        f = tuple(vals[i] for i in b_pos)
        g = lambda v: 3 * v + shift  # noqa: E731
        assert pattern_of(e, f) == pattern_of(tuple(map(g, e)), tuple(map(g, f)))


@settings(max_examples=50)
@given(matchings, st.data())
def test_certificates_respect_half_bound(m, data):
    k = data.draw(st.integers(0, m.size // 2))
    perm = data.draw(st.permutations(range(m.size)))
    left, right = perm[:k], perm[k:2 * k]
    try:
        cert = verify_twins(m, left, right)
    except NotIsomorphicError:
        return
    assert cert.size <= m.size // 2
