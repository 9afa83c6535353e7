"""Constructive twin finders and the bound calculator."""

from .blocks import (
    BlockHypergraph,
    auto_block_size,
    block_constant,
    block_hypergraph,
    block_twin_finder,
    exact_matching,
    greedy_matching,
)
from .bounds import BoundReport, ExponentRow, beta_r, bound_calculator, clique_floor, eta, exponent_row
from .cliques import clique_find, greedy_clique
from .halves import HalfSplit, split_counts
from .perms import longest_increasing, longest_monotone, permutation_twins
from .recursive import BRANCHES, find_twins_recursive

__all__ = [
    "BRANCHES",
    "BlockHypergraph",
    "BoundReport",
    "ExponentRow",
    "HalfSplit",
    "auto_block_size",
    "beta_r",
    "block_constant",
    "block_hypergraph",
    "block_twin_finder",
    "bound_calculator",
    "clique_find",
    "clique_floor",
    "eta",
    "exact_matching",
    "exponent_row",
    "find_twins_recursive",
    "greedy_clique",
    "greedy_matching",
    "longest_increasing",
    "longest_monotone",
    "permutation_twins",
    "split_counts",
]
