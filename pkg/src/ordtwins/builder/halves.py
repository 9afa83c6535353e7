"""Histogram of how edges straddle the midpoint of the ground set."""

from __future__ import annotations

from dataclasses import dataclass

from ..matchcore import MatchingError, OrderedMatching


@dataclass(frozen=True)
class HalfSplit:
    matching: OrderedMatching
    half: int
    counts: tuple[int, ...]
    """``counts[p]`` edges have exactly p vertices in ``1..half``."""

    def members(self, p: int) -> list[int]:
        return [i for i, e in enumerate(self.matching.edges) if _inside(e, self.half) == p]

    def check(self) -> None:
        r = self.matching.rank
        n = self.matching.size
        total = r * n
        assert sum(self.counts) == n
        assert sum(p * c for p, c in enumerate(self.counts)) == total // 2
        assert sum((r - p) * c for p, c in enumerate(self.counts)) == total - total // 2
        assert 2 * max(self.counts[0], self.counts[r]) <= n


def _inside(edge, half: int) -> int:
    return sum(1 for v in edge if v <= half)


def split_counts(m: OrderedMatching) -> HalfSplit:
    if not m.is_full:
        raise MatchingError("split_counts needs a full matching on 1..rn")
    half = m.rank * m.size // 2
    counts = [0] * (m.rank + 1)
    for e in m.edges:
        counts[_inside(e, half)] += 1
    return HalfSplit(m, half, tuple(counts))
