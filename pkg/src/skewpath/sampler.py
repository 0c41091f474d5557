"""Uniform random paths by ranking/unranking over exact completion counts.

A single uniform integer below the total count is drawn and unranked in the
lexicographic order ``U < g < b < r``; the choice at each step is therefore an
exact inverse-CDF selection with no floating-point bias.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .paths import Path, PrefixClass, Step, allowed_steps, validate_path

RNG_ALGORITHM = "python-random-mt19937"


@dataclass(frozen=True)
class CountTable:
    """``counts[r][level][cls]``: number of ways to finish a closed path in ``r`` steps."""

    n: int
    counts: tuple[tuple[dict[PrefixClass, int], ...], ...]

    def completions(self, remaining: int, level: int, cls: PrefixClass) -> int:
        if remaining < 0 or level < 0 or level > remaining:
            return 0
        return self.counts[remaining][level][cls]

    @property
    def total(self) -> int:
        return self.completions(2 * self.n, 0, PrefixClass.EMPTY)

    def step_weight(self, remaining: int, level: int, step: Step) -> int:
        return self.completions(remaining - 1, level + step.delta, PrefixClass.of(step))


@lru_cache(maxsize=32)
def build_count_table(n: int) -> CountTable:
    if n < 0:
        raise ValueError("n must be non-negative")
    rows: list[tuple[dict[PrefixClass, int], ...]] = []
    rows.append(({cls: 1 for cls in PrefixClass},))
    for r in range(1, 2 * n + 1):
        prev = rows[-1]
        row = []
        for level in range(r + 1):
            entry = {}
            for cls in PrefixClass:
                total = 0
                for s in allowed_steps(level, cls):
                    nxt = level + s.delta
                    if nxt <= r - 1:
                        total += prev[nxt][PrefixClass.of(s)]
                entry[cls] = total
            row.append(entry)
        rows.append(tuple(row))
    return CountTable(n, tuple(rows))


def unrank_path(n: int, rank: int) -> Path:
    """The ``rank``-th closed path of semilength ``n`` in lexicographic order."""
    table = build_count_table(n)
    if not 0 <= rank < table.total:
        raise IndexError(f"rank {rank} out of range for {table.total} paths")
    level, cls = 0, PrefixClass.EMPTY
    steps: list[Step] = []
    for remaining in range(2 * n, 0, -1):
        for s in allowed_steps(level, cls):
            w = table.step_weight(remaining, level, s)
            if rank < w:
                break
            rank -= w
        else:  # pragma: no cover - counts are exact
            raise AssertionError("unranking ran past the last step")
        steps.append(s)
        level += s.delta
        cls = PrefixClass.of(s)
    return validate_path(steps)


def rank_path(path: Path) -> int:
    n = path.semilength
    table = build_count_table(n)
    level, cls = 0, PrefixClass.EMPTY
    rank = 0
    for idx, s in enumerate(path.steps):
        remaining = 2 * n - idx
        for t in allowed_steps(level, cls):
            if t is s:
                break
            rank += table.step_weight(remaining, level, t)
        level += s.delta
        cls = PrefixClass.of(s)
    return rank


def sample_path(n: int, seed: int | None = None, rng: random.Random | None = None) -> Path:
    """A uniformly random closed path of semilength ``n``; deterministic for a fixed seed."""
    if rng is None:
        rng = random.Random(seed)
    total = build_count_table(n).total
    return unrank_path(n, rng.randrange(total))


def sample_paths(n: int, trials: int, seed: int):
    rng = random.Random(seed)
    total = build_count_table(n).total
    for _ in range(trials):
        yield unrank_path(n, rng.randrange(total))


@dataclass(frozen=True)
class HeightStats:
    mean: float
    stderr: float
    trials: int
    histogram: dict[int, int]


def empirical_height_stats(n: int, trials: int, seed: int) -> HeightStats:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    hist: dict[int, int] = {}
    for p in sample_paths(n, trials, seed):
        hist[p.height] = hist.get(p.height, 0) + 1
    mean = sum(h * c for h, c in hist.items()) / trials
    if trials > 1:
        var = sum(c * (h - mean) ** 2 for h, c in hist.items()) / (trials - 1)
        stderr = math.sqrt(var / trials)
    else:
        stderr = 0.0
    return HeightStats(mean, stderr, trials, dict(sorted(hist.items())))

