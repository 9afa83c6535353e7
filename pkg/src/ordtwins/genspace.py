"""Uniform generation, exhaustive enumeration and exact counting of matchings."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Iterator

import numpy as np

from .matchcore import Edge, MatchingError, OrderedMatching

DEFAULT_ENUMERATION_CAP = 3_000_000


class BudgetExceededError(RuntimeError):
    """An exact computation would exceed its configured budget."""


@dataclass(frozen=True)
class SeededSource:
    """Reproducible random stream keyed by ``(master_seed, stream_index)``.

    ``stream_index`` may be an int or a tuple of ints; each distinct key gives
    an independent Philox stream, so parallel trials never share state.
    """

    master_seed: int
    stream_index: int | tuple[int, ...] = 0

    def generator(self) -> np.random.Generator:
        key = self.stream_index if isinstance(self.stream_index, tuple) else (self.stream_index,)
        seq = np.random.SeedSequence(entropy=self.master_seed, spawn_key=tuple(int(k) for k in key))
        return np.random.Generator(np.random.Philox(seq))

    def derive_seed(self) -> int:
        """A 64-bit integer summarising this stream, usable as a new master seed."""
        key = self.stream_index if isinstance(self.stream_index, tuple) else (self.stream_index,)
        seq = np.random.SeedSequence(entropy=self.master_seed, spawn_key=tuple(int(k) for k in key))
        return int(seq.generate_state(1, dtype=np.uint64)[0])


def shuffle(values: list, rng: np.random.Generator) -> list:
    """In-place backward Fisher-Yates exchange.

    The swap partners are drawn up front; numpy's bounded integer sampler is
    unbiased for every upper bound.
    """
    m = len(values)
    if m < 2:
        return values
    partners = rng.integers(0, np.arange(m, 1, -1)).tolist()
    for i, j in zip(range(m - 1, 0, -1), partners):
        values[i], values[j] = values[j], values[i]
    return values


def random_permutation(m: int, src: SeededSource | np.random.Generator) -> list[int]:
    rng = src.generator() if isinstance(src, SeededSource) else src
    return shuffle(list(range(1, m + 1)), rng)


def chop(perm, r: int) -> tuple[Edge, ...]:
    """Cut a permutation of ``1..rn`` into consecutive r-blocks, sorted as edges."""
    arr = np.asarray(perm, dtype=np.int64).reshape(-1, r)
    arr.sort(axis=1)
    arr = arr[np.argsort(arr[:, 0], kind="stable")]
    return tuple(map(tuple, arr.tolist()))


def random_matching(n: int, r: int, src: SeededSource | np.random.Generator) -> OrderedMatching:
    """Uniform ordered r-matching on ``1..rn``.

    Each matching arises from exactly ``(r!)^n n!`` permutations, so chopping a
    uniform permutation gives a uniform matching.
    """
    if n < 1 or r < 2:
        raise MatchingError(f"need n >= 1 and r >= 2, got n={n}, r={r}")
    perm = random_permutation(r * n, src)
    return OrderedMatching._trusted(r, chop(perm, r), r * n)


def count_matchings(n: int, r: int) -> int:
    """``(rn)! / ((r!)^n n!)``; one empty matching when ``n == 0``."""
    if n < 0:
        raise MatchingError("n must be non-negative")
    if r < 2:
        raise MatchingError("r must be at least 2")
    return factorial(r * n) // (factorial(r) ** n * factorial(n))


def _edge_lists(free: tuple[int, ...], r: int) -> Iterator[list[Edge]]:
    if not free:
        yield []
        return
    first, rest = free[0], free[1:]
    for partners in combinations(rest, r - 1):
        chosen = set(partners)
        remaining = tuple(v for v in rest if v not in chosen)
        head = (first,) + partners
        for tail in _edge_lists(remaining, r):
            yield [head] + tail


def enumerate_matchings(
    n: int, r: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[OrderedMatching]:
    """Every full matching on ``1..rn`` once, in lexicographic order of edge lists."""
    if n < 0 or r < 2:
        raise MatchingError(f"need n >= 0 and r >= 2, got n={n}, r={r}")
    total = count_matchings(n, r)
    if total > cap:
        raise BudgetExceededError(f"{total} matchings exceed the enumeration cap {cap}")
    for edges in _edge_lists(tuple(range(1, r * n + 1)), r):
        yield OrderedMatching._trusted(r, tuple(edges), r * n)


def expected_twin_count(n: int, r: int, k: int, form: str = "closed") -> Fraction:
    """Exact expected number of (unordered) twin pairs of size k in a uniform
    random r-matching of size n.

    ``form="multinomial"`` evaluates the unsimplified counting expression; both
    forms agree exactly.
    """
    if k < 0:
        raise MatchingError("k must be non-negative")
    if n < 1 or r < 2:
        raise MatchingError(f"need n >= 1 and r >= 2, got n={n}, r={r}")
    if 2 * k > n:
        return Fraction(0)
    if form == "closed":
        return Fraction(
            factorial(n) * factorial(r) ** k,
            2 * factorial(n - 2 * k) * factorial(k) * factorial(r * k),
        )
    if form == "multinomial":
        rk, rn = r * k, r * n
        multinomial = factorial(rn) // (factorial(rk) ** 2 * factorial(rn - 2 * rk))
        return Fraction(
            multinomial * count_matchings(k, r) * count_matchings(n - 2 * k, r),
            2 * count_matchings(n, r),
        )
    raise ValueError(f"unknown form {form!r}")


def expected_pair_count(n: int, r: int, a: int) -> Fraction:
    """Expected number of edge pairs that are I-sets for a common block set I,
    with ``1..rn`` cut into ``N = rn/a`` consecutive blocks of size ``a``."""
    if n < 1 or r < 2:
        raise MatchingError(f"need n >= 1 and r >= 2, got n={n}, r={r}")
    if a < 1 or (r * n) % a:
        raise MatchingError(f"block size {a} does not divide {r * n}")
    if n < 2:
        return Fraction(0)
    blocks = r * n // a
    return Fraction(
        comb(blocks, r) * comb(a, 2) ** r * 2 ** (r - 1) * count_matchings(n - 2, r),
        count_matchings(n, r),
    )
