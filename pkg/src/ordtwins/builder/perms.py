"""Twins in permutations: exact search for short inputs, monotone split beyond."""

from __future__ import annotations

from bisect import bisect_left
from typing import Sequence

from ..oracle import tau_twins_exact

PERM_EXACT_BUDGET = 12


def longest_increasing(values: Sequence[int]) -> list[int]:
    """Positions of one longest strictly increasing subsequence (patience sorting)."""
    tails: list[int] = []
    tail_pos: list[int] = []
    back = [-1] * len(values)
    for i, v in enumerate(values):
        k = bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
            tail_pos.append(i)
        else:
            tails[k] = v
            tail_pos[k] = i
        back[i] = tail_pos[k - 1] if k else -1
    out = []
    i = tail_pos[-1] if tail_pos else -1
    while i >= 0:
        out.append(i)
        i = back[i]
    return out[::-1]


def longest_monotone(values: Sequence[int]) -> list[int]:
    """Positions of a longest increasing or decreasing subsequence; for distinct
    values its length is at least ceil(sqrt(m))."""
    inc = longest_increasing(values)
    dec = longest_increasing([-v for v in values])
    return inc if len(inc) >= len(dec) else dec


def permutation_twins(
    pi: Sequence[int], exact_budget: int = PERM_EXACT_BUDGET
) -> tuple[list[int], list[int]]:
    """Two disjoint 0-based position lists whose subsequences are order-isomorphic.

    Values only need to be distinct; they are compared, never indexed.
    """
    values = list(pi)
    m = len(values)
    if m <= 1:
        return [], []
    if m <= exact_budget:
        ranks = {v: i for i, v in enumerate(sorted(values), start=1)}
        _, left, right = tau_twins_exact([ranks[v] for v in values], budget=exact_budget)
        return list(left), list(right)
    run = longest_monotone(values)
    half = len(run) // 2
    return run[:half], run[len(run) - half:]
