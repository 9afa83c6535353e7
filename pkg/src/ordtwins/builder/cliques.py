"""Large pattern cliques: exact search for small inputs, greedy sweeps beyond."""

from __future__ import annotations

from ..matchcore import OrderedMatching, enumerate_patterns
from ..oracle import (
    CliqueCertificate,
    adjacency_bitsets,
    max_clique_exact,
    pattern_code,
    pattern_codes,
)

CLIQUE_EXACT_BUDGET = 40
GREEDY_STARTS = 32


def _sweep(adj: list[int], start: int) -> list[int]:
    members = [start]
    cand = adj[start]
    while cand:
        v = (cand & -cand).bit_length() - 1
        members.append(v)
        cand &= adj[v]
    return sorted(members)


def greedy_clique(m: OrderedMatching, starts: int = GREEDY_STARTS) -> CliqueCertificate:
    """Best greedy sweep over all patterns.

    A sweep starts from one edge and keeps adding the leftmost edge compatible
    with every member so far; up to ``starts`` evenly spaced start edges are tried.
    """
    n = m.size
    patterns = enumerate_patterns(m.rank)
    if n == 0:
        return CliqueCertificate(m, patterns[0], ())
    codes = pattern_codes(m)
    step = max(1, n // starts)
    best, best_p = [0], patterns[0]
    for p in patterns:
        adj = adjacency_bitsets(codes, pattern_code(p))
        for s in range(0, n, step):
            if adj[s].bit_count() + 1 <= len(best):
                continue
            members = _sweep(adj, s)
            if len(members) > len(best):
                best, best_p = members, p
    return CliqueCertificate(m, best_p, tuple(best))


def clique_find(
    m: OrderedMatching, exact_budget: int = CLIQUE_EXACT_BUDGET, starts: int = GREEDY_STARTS
) -> CliqueCertificate:
    """A large P-clique for some pattern P; exact when ``m.size <= exact_budget``."""
    if m.size <= exact_budget:
        return max_clique_exact(m, None, budget=exact_budget)[1]
    return greedy_clique(m, starts)
