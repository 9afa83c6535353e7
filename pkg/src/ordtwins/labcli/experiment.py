"""Monte Carlo sweeps over random matchings and log-log exponent fits."""

from __future__ import annotations

import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..builder import block_twin_finder, clique_find, find_twins_recursive
from ..genspace import BudgetExceededError, SeededSource, random_matching
from ..oracle import _twins_budget, max_twins_exact

METHODS = ("recursive", "block", "clique", "oracle")
COLUMNS = ("r", "n", "trial", "seed", "method", "size", "elapsed_ms")


@dataclass(frozen=True)
class Row:
    r: int
    n: int
    trial: int
    seed: int
    method: str
    size: int
    elapsed_ms: float = 0.0


@dataclass(frozen=True)
class ExperimentPlan:
    method: str
    r: int
    grid: tuple[int, ...]
    trials: int
    seed: int
    block_size: int | str = "auto"
    timing: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.r < 2:
            raise ValueError("r must be at least 2")
        if not self.grid or any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ValueError(f"grid must be non-empty and strictly increasing: {self.grid}")
        if self.grid[0] < 1:
            raise ValueError("grid values must be positive")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.method == "oracle":
            limit = _twins_budget(self.r)
            if self.grid[-1] > limit:
                raise BudgetExceededError(
                    f"oracle method: n={self.grid[-1]} exceeds the exact budget {limit} for r={self.r}"
                )


def trial_seed(master_seed: int, n_index: int, trial: int) -> int:
    return SeededSource(master_seed, (n_index, trial)).derive_seed()


def run_cell(method: str, r: int, n: int, seed: int, block_size: int | str = "auto") -> int:
    """Size produced by ``method`` on the random matching drawn from ``seed``."""
    m = random_matching(n, r, SeededSource(seed, 0))
    if method == "recursive":
        return find_twins_recursive(m).size
    if method == "block":
        return block_twin_finder(m, block_size).size
    if method == "clique":
        return clique_find(m).size
    if method == "oracle":
        return max_twins_exact(m)[0]
    raise ValueError(f"unknown method {method!r}")


def _task(args: tuple) -> Row:
    method, r, n, trial, seed, block_size, timing = args
    start = time.perf_counter()
    size = run_cell(method, r, n, seed, block_size)
    elapsed = round((time.perf_counter() - start) * 1000, 3) if timing else 0.0
    return Row(r, n, trial, seed, method, size, elapsed)


def run_experiment(plan: ExperimentPlan) -> list[Row]:
    """One row per (n, trial), sorted by (n, trial) whatever the worker count."""
    tasks = [
        (plan.method, plan.r, n, t, trial_seed(plan.seed, i, t), plan.block_size, plan.timing)
        for i, n in enumerate(plan.grid)
        for t in range(plan.trials)
    ]
    if plan.workers > 1:
        with ProcessPoolExecutor(max_workers=plan.workers) as pool:
            rows = list(pool.map(_task, tasks, chunksize=max(1, len(tasks) // (4 * plan.workers))))
    else:
        rows = [_task(t) for t in tasks]
    return sorted(rows, key=lambda row: (row.n, row.trial))


def summarize(rows: list[Row], stat: str = "median") -> list[tuple[int, float]]:
    """Per-n statistic of the sizes."""
    if stat not in ("median", "mean"):
        raise ValueError(f"unknown statistic {stat!r}")
    by_n: dict[int, list[int]] = {}
    for row in rows:
        by_n.setdefault(row.n, []).append(row.size)
    agg = statistics.median if stat == "median" else statistics.fmean
    return [(n, float(agg(sizes))) for n, sizes in sorted(by_n.items())]


@dataclass(frozen=True)
class ScalingFit:
    points: tuple[tuple[float, float], ...]
    slope: float
    intercept: float
    residual: float
    excluded: int

    def as_dict(self) -> dict:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "residual": self.residual,
            "points": [list(p) for p in self.points],
            "excluded": self.excluded,
        }


def fit_exponent(points) -> ScalingFit:
    """Least-squares slope of log(statistic) on log(n); non-positive
    statistics are dropped and counted in ``excluded``."""
    pts = [(float(n), float(s)) for n, s in points]
    usable = [(n, s) for n, s in pts if s > 0 and n > 0]
    if len(usable) < 3:
        raise ValueError(f"need at least 3 points with positive statistic, got {len(usable)}")
    x = np.log([n for n, _ in usable])
    y = np.log([s for _, s in usable])
    design = np.column_stack([x, np.ones_like(x)])
    (slope, intercept), *_ = np.linalg.lstsq(design, y, rcond=None)
    resid = y - (slope * x + intercept)
    return ScalingFit(
        tuple(usable),
        float(slope),
        float(intercept),
        float(math.sqrt(np.mean(resid**2))),
        len(pts) - len(usable),
    )


def relative_iqr(sizes) -> float:
    """Interquartile range over median; infinite when the median is 0."""
    q1, med, q3 = np.percentile(np.asarray(sizes, dtype=float), [25, 50, 75])
    if med == 0:
        return math.inf
    return float((q3 - q1) / med)
