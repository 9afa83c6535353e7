"""Ordered r-matchings, their word form, canonical forms and two-edge patterns.

An ordered r-matching of size n is a set of n pairwise disjoint r-element
edges on a linearly ordered ground set.  Edges are stored as ascending tuples
of positive integers, and the edge list itself is sorted by leftmost vertex,
so edge ``i`` is the edge labelled with the ``i``-th letter of the word.
"""

from __future__ import annotations

import json
import string
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, ...]

LETTERS = string.ascii_uppercase


class MatchingError(ValueError):
    """Raised for malformed matchings, words or patterns."""


class TwinsError(ValueError):
    """Base class for rejected twin certificates."""


class TwinsOverlapError(TwinsError):
    pass


class TwinsSizeError(TwinsError):
    pass


class NotIsomorphicError(TwinsError):
    pass


@dataclass(frozen=True)
class OrderedMatching:
    rank: int
    edges: tuple[Edge, ...]
    ground_size: int = field(default=-1)

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise MatchingError(f"rank must be at least 2, got {self.rank}")
        edges = tuple(tuple(int(v) for v in e) for e in self.edges)
        seen: set[int] = set()
        for e in edges:
            if len(e) != self.rank:
                raise MatchingError(f"edge {e} does not have {self.rank} vertices")
            if any(a >= b for a, b in zip(e, e[1:])):
                raise MatchingError(f"edge {e} is not strictly increasing")
            if e[0] < 1:
                raise MatchingError(f"edge {e} has a non-positive vertex")
            if seen.intersection(e):
                raise MatchingError(f"edge {e} intersects an earlier edge")
            seen.update(e)
        edges = tuple(sorted(edges))
        object.__setattr__(self, "edges", edges)
        top = max(seen, default=0)
        if self.ground_size < 0:
            object.__setattr__(self, "ground_size", top)
        elif self.ground_size < top:
            raise MatchingError("ground_size is smaller than the largest vertex")

    @classmethod
    def _trusted(cls, rank: int, edges: tuple[Edge, ...], ground_size: int) -> "OrderedMatching":
        # Skips validation; callers guarantee sorted, disjoint, ascending edges.
        obj = object.__new__(cls)
        object.__setattr__(obj, "rank", rank)
        object.__setattr__(obj, "edges", edges)
        object.__setattr__(obj, "ground_size", ground_size)
        return obj

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], rank: int | None = None) -> "OrderedMatching":
        edges = [tuple(sorted(int(v) for v in e)) for e in edges]
        if rank is None:
            if not edges:
                raise MatchingError("cannot infer the rank of an empty matching")
            rank = len(edges[0])
        return cls(rank, tuple(edges))

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> list[int]:
        return sorted(v for e in self.edges for v in e)

    @property
    def is_full(self) -> bool:
        """True when the edges cover exactly ``1..r*n``."""
        return self.vertices == list(range(1, self.rank * self.size + 1))

    def sub(self, indices: Iterable[int]) -> "OrderedMatching":
        """The sub-matching formed by the given edge indices (positions kept)."""
        idx = sorted(set(indices))
        return OrderedMatching._trusted(
            self.rank, tuple(self.edges[i] for i in idx), self.ground_size
        )

    def compress(self) -> "OrderedMatching":
        """Order-isomorphic copy on ``1..r*n``."""
        relabel = {v: i for i, v in enumerate(self.vertices, start=1)}
        edges = tuple(tuple(relabel[v] for v in e) for e in self.edges)
        return OrderedMatching._trusted(self.rank, edges, len(relabel))

    def to_json(self) -> str:
        return json.dumps({"r": self.rank, "edges": [list(e) for e in self.edges]})

    @classmethod
    def from_json(cls, text: str | dict) -> "OrderedMatching":
        data = json.loads(text) if isinstance(text, str) else text
        try:
            return cls(int(data["r"]), tuple(tuple(e) for e in data["edges"]))
        except (KeyError, TypeError) as exc:
            raise MatchingError(f"bad matching JSON: {exc}") from None

    def __str__(self) -> str:
        return to_word(self)


@dataclass(frozen=True)
class Pattern:
    """Order type of two disjoint r-edges; the earlier edge is ``A``."""

    word: str

    def __post_init__(self) -> None:
        w = self.word
        r = len(w) // 2
        if (
            len(w) % 2
            or r < 1
            or set(w) - {"A", "B"}
            or w.count("A") != r
            or w[0] != "A"
        ):
            raise MatchingError(f"not a pattern word: {w!r}")

    @property
    def rank(self) -> int:
        return len(self.word) // 2

    def __str__(self) -> str:
        return self.word


@dataclass(frozen=True)
class Permutation:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise MatchingError(f"not a permutation of 1..{len(vals)}: {vals}")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class TwinsCertificate:
    host: OrderedMatching
    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.left)

    def words(self) -> tuple[str, str]:
        return (
            canonical_form(self.host, self.left),
            canonical_form(self.host, self.right),
        )

    def as_dict(self) -> dict:
        lw, rw = self.words() if self.size else ("", "")
        return {
            "size": self.size,
            "left": list(self.left),
            "right": list(self.right),
            "left_word": lw,
            "right_word": rw,
        }


def _tokens(text: str | Sequence) -> list:
    if isinstance(text, str):
        return text.split() if any(c.isspace() for c in text.strip()) else list(text.strip())
    return list(text)


def parse_word(text: str | Sequence) -> OrderedMatching:
    """Read a word (letters, or whitespace-separated tokens) as a full matching.

    >>> parse_word("AABCBDBDACCD").edges
    ((1, 2, 9), (3, 5, 7), (4, 10, 11), (6, 8, 12))
    """
    return _parse(text)[0]


def symbol_indices(text: str | Sequence) -> dict:
    """Map each symbol of a word to the index of its edge in ``parse_word``."""
    return _parse(text)[1]


def _parse(text: str | Sequence) -> tuple[OrderedMatching, dict]:
    tokens = _tokens(text)
    if not tokens:
        raise MatchingError("empty word")
    positions: dict = {}
    for pos, sym in enumerate(tokens, start=1):
        positions.setdefault(sym, []).append(pos)
    counts = {sym: len(p) for sym, p in positions.items()}
    r = next(iter(counts.values()))
    if len(set(counts.values())) > 1:
        detail = ", ".join(f"{s} occurs {c}" for s, c in counts.items())
        raise MatchingError(f"symbols occur unequally often: {detail}")
    if r < 2:
        raise MatchingError("every symbol must occur at least twice")
    # dict order is first-occurrence order, which is the leftmost-vertex order
    edges = tuple(tuple(p) for p in positions.values())
    index = {sym: i for i, sym in enumerate(positions)}
    return OrderedMatching._trusted(r, edges, len(tokens)), index


def _labels(edges: Sequence[Edge]) -> list[int]:
    owner = {v: i for i, e in enumerate(edges) for v in e}
    return [owner[v] for v in sorted(owner)]


def _render(labels: Sequence[int], n: int) -> str:
    if n <= len(LETTERS):
        return "".join(LETTERS[i] for i in labels)
    return " ".join(str(i + 1) for i in labels)


def to_word(m: OrderedMatching) -> str:
    """Letters for n <= 26, otherwise space-separated 1-based edge numbers."""
    return _render(_labels(m.edges), m.size)


def canonical_form(m: OrderedMatching, indices: Iterable[int] | None = None) -> str:
    """Word of the order-isomorphic copy of ``m`` (or of the sub-matching on
    ``indices``); equal strings mean isomorphic sub-matchings."""
    edges = m.edges if indices is None else [m.edges[i] for i in sorted(set(indices))]
    return _render(_labels(edges), len(edges))


def pattern_of(e: Sequence[int], f: Sequence[int]) -> Pattern:
    """Pattern formed by disjoint edges ``e`` and ``f`` with ``min(e) < min(f)``."""
    if len(e) != len(f):
        raise MatchingError("edges of different rank")
    if set(e) & set(f):
        raise MatchingError(f"edges {tuple(e)} and {tuple(f)} intersect")
    if min(e) > min(f):
        raise MatchingError("the first edge must start before the second")
    merged = sorted([(v, "A") for v in e] + [(v, "B") for v in f])
    return Pattern("".join(s for _, s in merged))


def enumerate_patterns(r: int) -> list[Pattern]:
    """All r-patterns in lexicographic order; there are C(2r, r) / 2 of them."""
    if r < 2:
        raise MatchingError("patterns need r >= 2")
    out = []
    for b_pos in combinations(range(1, 2 * r), r):
        w = ["A"] * (2 * r)
        for p in b_pos:
            w[p] = "B"
        out.append(Pattern("".join(w)))
    out.sort(key=lambda p: p.word)
    return out


def verify_twins(m: OrderedMatching, left: Iterable[int], right: Iterable[int]) -> TwinsCertificate:
    left = tuple(sorted(set(left)))
    right = tuple(sorted(set(right)))
    n = m.size
    for i in left + right:
        if not 0 <= i < n:
            raise IndexError(f"edge index {i} out of range for size {n}")
    if set(left) & set(right):
        raise TwinsOverlapError(f"index sets share edges {sorted(set(left) & set(right))}")
    if len(left) != len(right):
        raise TwinsSizeError(f"sizes differ: {len(left)} != {len(right)}")
    if canonical_form(m, left) != canonical_form(m, right):
        raise NotIsomorphicError("sub-matchings are not order-isomorphic")
    return TwinsCertificate(m, left, right)
