"""Twins from the block hypergraph.

The ground set ``1..rn`` is cut into consecutive blocks of ``a`` vertices
(the last block may be short).  An edge meeting r distinct blocks ``I`` in one
vertex each is an I-set; ``I`` is a hyperedge of H when at least two edges are
I-sets.  Any matching in H gives twins: one witness per hyperedge on each side.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from ..matchcore import MatchingError, OrderedMatching, TwinsCertificate, verify_twins

EXACT_MATCHING_BUDGET = 40


def block_constant(r: int) -> float:
    """``(20 e r!)^(-1/(r+1))``."""
    return (20 * math.e * math.factorial(r)) ** (-1 / (r + 1))


def auto_block_size(n: int, r: int) -> int:
    raw = block_constant(r) * n ** ((r - 1) / (r + 1))
    a = int(Decimal(repr(raw)).quantize(Decimal(1), rounding=ROUND_HALF_UP))
    return max(2, min(a, r * n))


@dataclass(frozen=True)
class BlockHypergraph:
    block_size: int
    block_count: int
    rank: int
    hyperedges: dict[tuple[int, ...], tuple[int, ...]]
    """0-based block tuple ``I`` -> ascending edge indices that are I-sets (>= 2)."""
    isets: int
    pair_count: int

    @property
    def degree_cap(self) -> int:
        return self.block_size // 2

    def degrees(self) -> Counter:
        deg: Counter = Counter()
        for blocks in self.hyperedges:
            deg.update(blocks)
        return deg

    def degree_histogram(self) -> dict[int, int]:
        """``Z_d``: number of blocks of each degree d >= 1 in H."""
        return dict(sorted(Counter(self.degrees().values()).items()))

    def isolated_edges(self) -> int:
        deg = self.degrees()
        return sum(1 for blocks in self.hyperedges if all(deg[b] == 1 for b in blocks))

    def stats(self) -> dict:
        return {
            "a": self.block_size,
            "N": self.block_count,
            "W": len(self.hyperedges),
            "W1": self.isolated_edges(),
            "Y": self.pair_count,
            "isets": self.isets,
            "Z": self.degree_histogram(),
        }


def block_hypergraph(m: OrderedMatching, a: int) -> BlockHypergraph:
    if a < 2:
        raise MatchingError("block size must be at least 2")
    r, n = m.rank, m.size
    total = m.ground_size if m.ground_size > 0 else r * n
    count = -(-total // a)
    if n == 0:
        return BlockHypergraph(a, count, r, {}, 0, 0)
    blocks = (np.asarray(m.edges, dtype=np.int64) - 1) // a
    ok = np.all(np.diff(blocks, axis=1) > 0, axis=1)
    idx = np.flatnonzero(ok)
    hyperedges: dict[tuple[int, ...], tuple[int, ...]] = {}
    pairs = 0
    if idx.size:
        keys, inverse, counts = np.unique(blocks[idx], axis=0, return_inverse=True, return_counts=True)
        inverse = inverse.reshape(-1)
        pairs = int((counts * (counts - 1) // 2).sum())
        order = np.argsort(inverse, kind="stable")
        starts = np.concatenate(([0], np.cumsum(counts)))
        for g in np.flatnonzero(counts >= 2).tolist():
            members = idx[order[starts[g]:starts[g + 1]]]
            hyperedges[tuple(keys[g].tolist())] = tuple(sorted(members.tolist()))
    return BlockHypergraph(a, count, r, hyperedges, int(idx.size), pairs)


def greedy_matching(h: BlockHypergraph) -> list[tuple[int, ...]]:
    """Hyperedges taken in lexicographic order whenever their blocks are free."""
    used: set[int] = set()
    chosen = []
    for blocks in sorted(h.hyperedges):
        if used.isdisjoint(blocks):
            chosen.append(blocks)
            used.update(blocks)
    return chosen


def exact_matching(h: BlockHypergraph, budget: int = EXACT_MATCHING_BUDGET) -> list[tuple[int, ...]]:
    """Maximum matching of H by branching on the first remaining hyperedge."""
    edges = sorted(h.hyperedges)
    if len(edges) > budget:
        from ..genspace import BudgetExceededError

        raise BudgetExceededError(f"{len(edges)} hyperedges exceed the exact matching budget {budget}")
    masks = [sum(1 << b for b in e) for e in edges]
    best: list[int] = []

    def go(start: int, used: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + (len(edges) - start) <= len(best):
            return
        for j in range(start, len(edges)):
            if not masks[j] & used:
                chosen.append(j)
                go(j + 1, used | masks[j], chosen)
                chosen.pop()

    go(0, 0, [])
    return [edges[j] for j in best]


def block_twin_finder(
    m: OrderedMatching, a: int | str = "auto", exact: bool = False
) -> TwinsCertificate:
    if isinstance(a, str):
        if a.lower() != "auto":
            raise MatchingError(f"block size must be an integer or 'auto', got {a!r}")
        a = auto_block_size(max(m.size, 1), m.rank)
    h = block_hypergraph(m, int(a))
    chosen = exact_matching(h) if exact else greedy_matching(h)
    left = [h.hyperedges[b][0] for b in chosen]
    right = [h.hyperedges[b][1] for b in chosen]
    return verify_twins(m, left, right)
