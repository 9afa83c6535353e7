"""Twins in ordered r-matchings: exact oracles, constructive finders and a
Monte Carlo harness."""

from .genspace import (
    BudgetExceededError,
    SeededSource,
    count_matchings,
    enumerate_matchings,
    expected_pair_count,
    expected_twin_count,
    random_matching,
)
from .matchcore import (
    MatchingError,
    NotIsomorphicError,
    OrderedMatching,
    Pattern,
    Permutation,
    TwinsCertificate,
    TwinsError,
    TwinsOverlapError,
    TwinsSizeError,
    canonical_form,
    enumerate_patterns,
    parse_word,
    pattern_of,
    symbol_indices,
    to_word,
    verify_twins,
)

__version__ = "0.1.0"
