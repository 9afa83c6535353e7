"""Numeric lower bounds on t^(r)(n) from an assumed permutation-twins bound
``tau(n) >= beta * n**alpha``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

ALPHA = Fraction(3, 5)
BETA = Fraction(1, 8)


def eta(r: int) -> Fraction:
    return Fraction(1, 2**r - 1)


def clique_floor(n: float, r: int) -> float:
    """Guaranteed P-clique size: ``n^(1/3)`` for r = 2, ``n^eta_r / 2`` beyond."""
    if r == 2:
        return n ** (1 / 3)
    return 0.5 * n ** float(eta(r))


@dataclass(frozen=True)
class ExponentRow:
    rank: int
    deterministic: Fraction
    clique_only: Fraction
    random: Fraction


def exponent_row(r: int, alpha: Fraction = ALPHA) -> ExponentRow:
    return ExponentRow(r, alpha * eta(r - 1), eta(r), Fraction(2, r + 1))


@dataclass(frozen=True)
class BoundReport:
    rank: int
    n: int
    alpha: Fraction
    beta: Fraction
    beta_r: float
    bound_value: float
    exponents: ExponentRow

    @property
    def guaranteed(self) -> int:
        """Floor of the bound; 0 when the bound is below 1."""
        return math.floor(self.bound_value) if self.bound_value >= 1 else 0

    def as_dict(self) -> dict:
        return {
            "r": self.rank,
            "n": self.n,
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "beta_r": self.beta_r,
            "bound_value": self.bound_value,
            "guaranteed": self.guaranteed,
            "exponents": {
                "deterministic": str(self.exponents.deterministic),
                "clique_only": str(self.exponents.clique_only),
                "random": str(self.exponents.random),
            },
        }


def _check(alpha: Fraction, beta: Fraction, r: int) -> None:
    if not Fraction(3, 5) <= alpha <= Fraction(2, 3):
        raise ValueError(f"alpha must lie in [3/5, 2/3], got {alpha}")
    if beta <= 0:
        raise ValueError(f"beta must be positive, got {beta}")
    if r < 2:
        raise ValueError("r must be at least 2")


@lru_cache(maxsize=None)
def beta_r(r: int, alpha: Fraction = ALPHA, beta: Fraction = BETA) -> float:
    """Coefficient of the rank-r bound: ``beta`` at r = 2, otherwise
    ``min(min_{2<=p<=r-2} beta_p (12r)^(-alpha eta_{p-1}), beta 2^(-alpha))``."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    _check(alpha, beta, r)
    if r == 2:
        return float(beta)
    best = float(beta) * 2.0 ** -float(alpha)
    for p in range(2, r - 1):
        best = min(best, beta_r(p, alpha, beta) * (12 * r) ** -float(alpha * eta(p - 1)))
    return best


def bound_calculator(n: int, r: int, alpha=ALPHA, beta=BETA) -> BoundReport:
    """Lower bound on t^(r)(n): ``beta (n/4)^alpha`` at r = 2, otherwise
    ``beta_r (n/6r)^(alpha eta_{r-1})``."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    _check(alpha, beta, r)
    coeff = beta_r(r, alpha, beta)
    if r == 2:
        value = coeff * (n / 4) ** float(alpha)
    else:
        value = coeff * (n / (6 * r)) ** float(alpha * eta(r - 1))
    return BoundReport(r, n, alpha, beta, coeff, value, exponent_row(r, alpha))
