"""Exact brute-force solvers; ground truth for the constructive finders.

Twins-type searches share one routine: group the k-subsets of items by an
isomorphism key and look for mutually disjoint members inside each group.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .genspace import BudgetExceededError, count_matchings, enumerate_matchings
from .matchcore import (
    MatchingError,
    OrderedMatching,
    Pattern,
    Permutation,
    TwinsCertificate,
    enumerate_patterns,
    to_word,
    verify_twins,
)

TWINS_BUDGET = {2: 18, 3: 12}
TWINS_BUDGET_DEFAULT = 10
CLIQUE_BUDGET = 200
TAU_BUDGET = 14
SCAN_BUDGET = 3_000_000


@dataclass(frozen=True)
class CliqueCertificate:
    host: OrderedMatching
    pattern: Pattern | None
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ExtremalRecord:
    quantity: str
    rank: int | None
    size: int
    value: int
    witness: OrderedMatching | Permutation

    def witness_word(self) -> str:
        if isinstance(self.witness, Permutation):
            return " ".join(map(str, self.witness.values))
        return to_word(self.witness)


def _twins_budget(r: int) -> int:
    return TWINS_BUDGET.get(r, TWINS_BUDGET_DEFAULT)


# -- generic subset grouping -------------------------------------------------

def _subset_key_fn(m: OrderedMatching) -> Callable[[tuple[int, ...]], Hashable]:
    # label sequence of the whole word; a subset's key keeps its own letters
    owner = {v: i for i, e in enumerate(m.edges) for v in e}
    word = [owner[v] for v in sorted(owner)]

    def key(subset: tuple[int, ...]) -> Hashable:
        rank = {e: j for j, e in enumerate(subset)}
        return tuple(rank[x] for x in word if x in rank)

    return key


def _perm_key_fn(values: Sequence[int]) -> Callable[[tuple[int, ...]], Hashable]:
    def key(subset: tuple[int, ...]) -> Hashable:
        picked = [values[i] for i in subset]
        order = sorted(range(len(picked)), key=picked.__getitem__)
        std = [0] * len(picked)
        for rank, i in enumerate(order):
            std[i] = rank
        return tuple(std)

    return key


def _groups(n_items: int, k: int, key) -> dict:
    groups: dict = defaultdict(list)
    for subset in combinations(range(n_items), k):
        mask = 0
        for i in subset:
            mask |= 1 << i
        groups[key(subset)].append(mask)
    return groups


def _disjoint_family(masks: list[int], t: int) -> list[int] | None:
    """Find ``t`` pairwise disjoint masks, or None."""
    if t == 2:
        # disjoint partner of a mask must avoid it entirely
        for i, a in enumerate(masks):
            for b in masks[i + 1:]:
                if not a & b:
                    return [a, b]
        return None

    def extend(start: int, used: int, chosen: list[int]) -> list[int] | None:
        if len(chosen) == t:
            return chosen
        for j in range(start, len(masks)):
            if not masks[j] & used:
                found = extend(j + 1, used | masks[j], chosen + [masks[j]])
                if found:
                    return found
        return None

    return extend(0, 0, [])


def _bits(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def _max_tuplets(n_items: int, t: int, key, top_down: bool = True):
    ks = range(n_items // t, 0, -1) if top_down else range(1, n_items // t + 1)
    best = (0, [()] * t)
    for k in ks:
        hit = None
        for masks in _groups(n_items, k, key).values():
            if len(masks) >= t:
                hit = _disjoint_family(masks, t)
                if hit:
                    break
        if hit:
            best = (k, [_bits(x) for x in hit])
            if top_down:
                return best
        elif not top_down:
            return best
    return best


# -- matchings ---------------------------------------------------------------

def _check_twins_budget(m: OrderedMatching, budget: int | None) -> None:
    limit = _twins_budget(m.rank) if budget is None else budget
    if m.size > limit:
        raise BudgetExceededError(f"n={m.size} exceeds the exact twins budget {limit} for r={m.rank}")


def max_twins_exact(
    m: OrderedMatching, budget: int | None = None, top_down: bool = True
) -> tuple[int, TwinsCertificate]:
    """Exact t(M) with a witness certificate."""
    _check_twins_budget(m, budget)
    k, (left, right) = _max_tuplets(m.size, 2, _subset_key_fn(m), top_down)
    return k, verify_twins(m, left, right)


def max_tuplets_exact(m: OrderedMatching, t: int, budget: int | None = None) -> int:
    """Largest k admitting t pairwise disjoint, pairwise isomorphic k-sub-matchings."""
    if t < 2:
        raise MatchingError("t must be at least 2")
    _check_twins_budget(m, budget)
    if t > m.size:
        return 0
    return _max_tuplets(m.size, t, _subset_key_fn(m))[0]


def count_twin_pairs(m: OrderedMatching, k: int) -> int:
    """Number of unordered pairs of disjoint, isomorphic k-edge sub-matchings."""
    if k < 1 or 2 * k > m.size:
        return 0
    total = 0
    for masks in _groups(m.size, k, _subset_key_fn(m)).values():
        for i, a in enumerate(masks):
            total += sum(1 for b in masks[i + 1:] if not a & b)
    return total


# -- permutations ------------------------------------------------------------

def _as_values(pi) -> tuple[int, ...]:
    return pi.values if isinstance(pi, Permutation) else Permutation(tuple(pi)).values


def tau_twins_exact(pi, budget: int = TAU_BUDGET) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Largest twins in a permutation as (size, left positions, right positions),
    positions 0-based."""
    values = _as_values(pi)
    if len(values) > budget:
        raise BudgetExceededError(f"length {len(values)} exceeds the tau budget {budget}")
    k, (left, right) = _max_tuplets(len(values), 2, _perm_key_fn(values))
    return k, left, right


def tau_exact(pi, budget: int = TAU_BUDGET) -> int:
    return tau_twins_exact(pi, budget)[0]


# -- cliques -----------------------------------------------------------------

def pattern_codes(m: OrderedMatching) -> np.ndarray:
    """Matrix whose ``[i, j]`` entry (i < j) encodes the pattern of edges i, j.

    The code records, for each vertex of the later edge, how many vertices of
    the earlier edge precede it; entries with ``i >= j`` are -1.
    """
    n, r = m.size, m.rank
    codes = np.full((n, n), -1, dtype=np.int64)
    if n < 2:
        return codes
    arr = np.asarray(m.edges, dtype=np.int64)
    # before[i, j, q] = #{vertices of edge i below the q-th vertex of edge j}
    before = (arr[:, None, :, None] < arr[None, :, None, :]).sum(axis=2)
    weights = (r + 1) ** np.arange(r, dtype=np.int64)
    full = before @ weights
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    codes[upper] = full[upper]
    return codes


def pattern_code(p: Pattern) -> int:
    r = p.rank
    code, seen_a, q = 0, 0, 0
    for s in p.word:
        if s == "A":
            seen_a += 1
        else:
            code += seen_a * (r + 1) ** q
            q += 1
    return code


def adjacency_bitsets(codes: np.ndarray, code: int) -> list[int]:
    """Compatibility graph of one pattern as a list of int bitsets."""
    hit = codes == code
    hit = hit | hit.T
    packed = np.packbits(hit, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _color_bound(cand: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring; returns vertices and their colour numbers
    in nondecreasing colour order."""
    order: list[int] = []
    colors: list[int] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~(1 << v)
            avail &= ~adj[v]
            rest &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique_bitsets(adj: list[int], lower: int = 0) -> list[int]:
    """Branch and bound maximum clique with a greedy colouring bound."""
    best: list[int] = []
    floor = lower

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best, floor
        order, colors = _color_bound(cand, adj)
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + colors[idx] <= max(floor, len(best)):
                return
            v = order[idx]
            new_cand = cand & adj[v]
            clique.append(v)
            if new_cand:
                expand(clique, new_cand)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << len(adj)) - 1)
    return sorted(best)


def max_clique_exact(
    m: OrderedMatching, pattern: Pattern | str | None = None, budget: int = CLIQUE_BUDGET
) -> tuple[int, CliqueCertificate]:
    """Exact L_P(M), or L(M) when ``pattern`` is None (or ``"ALL"``)."""
    if m.size > budget:
        raise BudgetExceededError(f"m={m.size} exceeds the clique budget {budget}")
    if isinstance(pattern, str):
        pattern = None if pattern.upper() == "ALL" else Pattern(pattern)
    if pattern is not None and pattern.rank != m.rank:
        raise MatchingError(f"pattern {pattern} has the wrong rank for r={m.rank}")
    targets = [pattern] if pattern is not None else enumerate_patterns(m.rank)
    if m.size == 0:
        return 0, CliqueCertificate(m, targets[0], ())
    codes = pattern_codes(m)
    best_members: list[int] = [0]
    best_pattern = targets[0]
    for p in targets:
        members = max_clique_bitsets(adjacency_bitsets(codes, pattern_code(p)), lower=len(best_members))
        if len(members) > len(best_members):
            best_members, best_pattern = members, p
    return len(best_members), CliqueCertificate(m, best_pattern, tuple(best_members))


def check_clique(cert: CliqueCertificate) -> bool:
    from .matchcore import pattern_of

    edges = [cert.host.edges[i] for i in cert.members]
    return all(pattern_of(e, f) == cert.pattern for e, f in combinations(edges, 2))


# -- extremal scans ----------------------------------------------------------

def _instance_value(quantity: str, inst) -> int:
    if quantity == "t":
        return max_twins_exact(inst)[0]
    if quantity == "L":
        return max_clique_exact(inst)[0]
    return tau_exact(inst)


def _trivial_floor(quantity: str, n: int) -> int:
    # values no instance can go below; reaching one ends the scan early
    if quantity == "t":
        return 1 if n >= 2 else 0
    if quantity == "L":
        return min(n, 2)
    return 1 if n >= 2 else 0


def extremal_scan(
    quantity: str, r: int | None, n: int, budget: int = SCAN_BUDGET, early_exit: bool = True
) -> ExtremalRecord:
    """Minimum over every instance of size n of t(M), L(M) or tau(pi)."""
    if quantity not in ("t", "L", "tau"):
        raise ValueError(f"unknown quantity {quantity!r}")
    if quantity == "tau":
        if factorial(n) > budget:
            raise BudgetExceededError(f"{n}! permutations exceed the scan budget {budget}")
        instances: Iterable = (Permutation(p) for p in permutations(range(1, n + 1)))
    else:
        if r is None or r < 2:
            raise MatchingError("matching scans need r >= 2")
        if count_matchings(n, r) > budget:
            raise BudgetExceededError(f"{count_matchings(n, r)} matchings exceed the scan budget {budget}")
        instances = enumerate_matchings(n, r, cap=budget)
    floor = _trivial_floor(quantity, n)
    best = None
    for inst in instances:
        value = _instance_value(quantity, inst)
        if best is None or value < best[0]:
            best = (value, inst)
            if early_exit and value <= floor:
                break
    value, witness = best
    return ExtremalRecord(quantity, None if quantity == "tau" else r, n, value, witness)


def exact_twins_count_average(n: int, r: int, k: int) -> tuple[int, int]:
    """Sum of twin-pair counts over all matchings and the number of matchings."""
    total = 0
    count = 0
    for m in enumerate_matchings(n, r):
        total += count_twin_pairs(m, k)
        count += 1
    return total, count


__all__ = [
    "CliqueCertificate",
    "ExtremalRecord",
    "check_clique",
    "count_twin_pairs",
    "extremal_scan",
    "max_clique_exact",
    "max_tuplets_exact",
    "max_twins_exact",
    "pattern_codes",
    "pattern_code",
    "tau_exact",
    "tau_twins_exact",
]
