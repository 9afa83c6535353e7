"""Recursive twin finder built on the half-split case analysis.

With ``H1`` the first ``floor(rn/2)`` vertices and ``n_p`` the number of edges
meeting ``H1`` in exactly p vertices, the finder combines:

``halves``   twins found recursively inside ``H1`` and inside ``H2``,
             concatenated;
``crossing`` edges with p = r-1 (or p = 1): a clique on their (r-1)-vertex
             parts, then twins in the permutation of their single vertices;
``inner``    edges with 2 <= p <= r-2: a clique on one part, then recursive
             twins in the matching formed by the other parts;
``clique``   a clique of the whole matching split in half.

By default every branch with material to work on runs and the largest
verified result wins.  ``strict=True`` instead follows the threshold dispatch
(n/3 for ``halves``, n/(6r) for the subcases) and skips ``clique``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from ..matchcore import OrderedMatching, TwinsCertificate, TwinsError, verify_twins
from ..oracle import max_twins_exact
from .cliques import CLIQUE_EXACT_BUDGET, clique_find
from .perms import PERM_EXACT_BUDGET, longest_monotone, permutation_twins

BRANCHES = ("halves", "crossing", "inner", "clique")

Edge = tuple[int, ...]
Twins = tuple[list[int], list[int]]


@dataclass(frozen=True)
class RecursionConfig:
    branches: frozenset = frozenset(BRANCHES)
    strict: bool = False
    exact_below: int = 8
    clique_exact: int = CLIQUE_EXACT_BUDGET
    perm_exact: int = PERM_EXACT_BUDGET


def _compress(edges: Sequence[Edge]) -> list[Edge]:
    rel = {v: i for i, v in enumerate(sorted(v for e in edges for v in e), start=1)}
    return sorted(tuple(rel[v] for v in e) for e in edges)


def _matching(edges: Sequence[Edge], r: int) -> OrderedMatching:
    return OrderedMatching._trusted(r, tuple(edges), max((e[-1] for e in edges), default=0))


def _valid(edges: Sequence[Edge], r: int, twins: Twins) -> bool:
    left, right = twins
    if not left:
        return True
    try:
        verify_twins(_matching(edges, r), left, right)
    except TwinsError:
        return False
    return True


def _sub_twins(edges: Sequence[Edge], idx: Sequence[int], r: int, cfg: RecursionConfig) -> Twins:
    """Twins of the sub-matching on ``idx``, as indices into ``edges``."""
    if len(idx) < 2:
        return [], []
    sub = [edges[i] for i in idx]
    order = sorted(range(len(sub)), key=lambda k: sub[k][0])
    left, right = _solve(_compress([sub[k] for k in order]), r, cfg)
    return [idx[order[k]] for k in left], [idx[order[k]] for k in right]


def _clique_order(parts: list[Edge], rank: int, cfg: RecursionConfig) -> list[int]:
    """Positions (into ``parts``) of a large clique, in leftmost-vertex order."""
    order = sorted(range(len(parts)), key=lambda k: parts[k][0])
    if rank == 1:
        return order
    ordered = [parts[k] for k in order]
    cert = clique_find(_matching(_compress(ordered), rank), exact_budget=cfg.clique_exact)
    return [order[k] for k in cert.members]


def _crossing(edges, idx, r, big: Callable, single: Callable, cfg) -> Twins:
    """Clique on the (r-1)-vertex parts, twins in the permutation of the rest."""
    members = _clique_order([big(edges[i]) for i in idx], r - 1, cfg)
    perm = [single(edges[idx[k]]) for k in members]
    left, right = permutation_twins(perm, exact_budget=cfg.perm_exact)
    return [idx[members[k]] for k in left], [idx[members[k]] for k in right]


def _inner(edges, idx, r, split: int, clique_first: bool, cfg) -> list[Twins]:
    """Clique on one part of each edge, recursive twins on the other parts."""
    first = [edges[i][:split] for i in idx]
    second = [edges[i][split:] for i in idx]
    clique_parts, rest_parts = (first, second) if clique_first else (second, first)
    clique_rank = len(clique_parts[0])
    members = _clique_order(clique_parts, clique_rank, cfg)
    rest_rank = r - clique_rank
    out = []
    # Rest-part twins pair edges by rest order; the clique pattern is oriented by
    # clique order, so the two orders must agree (or be reversed) on the twins.
    # A monotone run guarantees that; the unrestricted try is kept if it verifies.
    rest_min = [rest_parts[k][0] for k in members]
    run = longest_monotone(rest_min)
    for chosen in ([members[k] for k in run], members):
        if len(chosen) < 2:
            continue
        sub_idx = [idx[k] for k in chosen]
        parts = [rest_parts[k] for k in chosen]
        order = sorted(range(len(parts)), key=lambda k: parts[k][0])
        left, right = _solve(_compress([parts[k] for k in order]), rest_rank, cfg)
        out.append(([sub_idx[order[k]] for k in left], [sub_idx[order[k]] for k in right]))
    return out


def _solve(edges: list[Edge], r: int, cfg: RecursionConfig) -> Twins:
    n = len(edges)
    if n <= 1:
        return [], []
    if n <= cfg.exact_below:
        _, cert = max_twins_exact(_matching(edges, r), budget=cfg.exact_below)
        return list(cert.left), list(cert.right)

    half = r * n // 2
    by_p: dict[int, list[int]] = {p: [] for p in range(r + 1)}
    for i, e in enumerate(edges):
        by_p[sum(1 for v in e if v <= half)].append(i)
    counts = {p: len(v) for p, v in by_p.items()}

    run_halves = "halves" in cfg.branches and counts[0] + counts[r] >= 2
    crossing_sides = [r - 1, 1] if r > 2 else [1]
    crossing_sides = [p for p in crossing_sides if counts[p] >= 2]
    inner_sides = [p for p in range(2, r - 1) if counts[p] >= 2]
    run_clique = "clique" in cfg.branches
    if cfg.strict:
        run_clique = False
        heavy = lambda p: 6 * r * counts[p] >= n  # noqa: E731
        if 3 * min(counts[0], counts[r]) >= n:
            crossing_sides, inner_sides = [], []
        else:
            run_halves = False
            crossing_sides = [p for p in crossing_sides if heavy(p)]
            inner_sides = [] if crossing_sides else [p for p in inner_sides if heavy(p)]

    candidates: list[Twins] = []
    if run_halves:
        l1, r1 = _sub_twins(edges, by_p[r], r, cfg)
        l2, r2 = _sub_twins(edges, by_p[0], r, cfg)
        candidates.append((l1 + l2, r1 + r2))
    if "crossing" in cfg.branches:
        for p in crossing_sides:
            if p == r - 1:
                candidates.append(_crossing(edges, by_p[p], r, lambda e: e[:-1], lambda e: e[-1], cfg))
            else:
                candidates.append(_crossing(edges, by_p[p], r, lambda e: e[1:], lambda e: e[0], cfg))
    if "inner" in cfg.branches:
        for p in inner_sides:
            for clique_first in (True, False):
                candidates.extend(_inner(edges, by_p[p], r, p, clique_first, cfg))
    if run_clique:
        cert = clique_find(_matching(edges, r), exact_budget=cfg.clique_exact)
        h = cert.size // 2
        candidates.append((list(cert.members[:h]), list(cert.members[cert.size - h:])))

    best: Twins = ([], [])
    for cand in candidates:
        if len(cand[0]) > len(best[0]) and _valid(edges, r, cand):
            best = (sorted(cand[0]), sorted(cand[1]))
    return best


def find_twins_recursive(
    m: OrderedMatching,
    branches: Sequence[str] | None = None,
    strict: bool = False,
    exact_below: int = 8,
    clique_exact: int = CLIQUE_EXACT_BUDGET,
    perm_exact: int = PERM_EXACT_BUDGET,
) -> TwinsCertificate:
    """Twins of ``m`` built by the recursive case analysis; always verified."""
    chosen = frozenset(BRANCHES if branches is None else branches)
    unknown = chosen - set(BRANCHES)
    if unknown:
        raise ValueError(f"unknown branches: {sorted(unknown)}")
    cfg = RecursionConfig(chosen, strict, exact_below, clique_exact, perm_exact)
    # compression keeps edge order, so indices carry over to m unchanged
    left, right = _solve(_compress(m.edges), m.rank, cfg)
    return verify_twins(m, left, right)
