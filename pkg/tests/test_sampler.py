import math
from collections import Counter

import pytest
from scipy.stats import chisquare

from skewpath.height import average_height_exact, height_distribution
from skewpath.paths import PrefixClass, enumerate_paths, validate_path
from skewpath.sampler import (
    build_count_table,
    empirical_height_stats,
    rank_path,
    sample_path,
    sample_paths,
    unrank_path,
)

SEED = 20261015


@pytest.mark.parametrize("n, total", [(0, 1), (2, 10), (3, 58), (4, 370)])
def test_count_table_root(n, total):
    assert build_count_table(n).total == total


def test_count_table_terminals():
    table = build_count_table(3)
    for cls in PrefixClass:
        assert table.completions(0, 0, cls) == 1
    assert table.completions(0, 1, PrefixClass.LAST_UP) == 0


def test_rank_unrank_bijection():
    for n in range(5):
        for i, p in enumerate(enumerate_paths(n)):
            assert unrank_path(n, i) == p
            assert rank_path(p) == i


def test_determinism():
    assert sample_path(10, seed=7) == sample_path(10, seed=7)
    assert list(sample_paths(5, 20, SEED)) == list(sample_paths(5, 20, SEED))


def test_n1_two_paths():
    counts = Counter(str(p) for p in sample_paths(1, 4000, SEED))
    assert set(counts) == {"Ug", "Ub"}
    assert abs(counts["Ug"] - 2000) <= 5 * math.sqrt(4000 * 0.25)


def test_samples_are_valid_paths():
    for p in sample_paths(12, 200, SEED):
        q = validate_path(p.steps)
        assert q.end_level == 0 and q.semilength == 12


def test_uniform_over_all_370_paths():
    trials = 40000
    counts = Counter(str(p) for p in sample_paths(4, trials, SEED))
    assert len(counts) == 370
    prob = 1 / 370
    sigma = math.sqrt(trials * prob * (1 - prob))
    for c in counts.values():
        assert abs(c - trials * prob) <= 5 * sigma


def test_height_histogram_chi_square():
    trials = 20000
    stats = empirical_height_stats(4, trials, SEED)
    dist = height_distribution(4)
    heights = sorted(dist.counts)
    observed = [stats.histogram.get(h, 0) for h in heights]
    expected = [trials * dist.counts[h] / dist.total for h in heights]
    assert chisquare(observed, expected).pvalue > 0.001


def test_n1_stats_degenerate():
    stats = empirical_height_stats(1, 50, SEED)
    assert stats.mean == 1 and stats.stderr == 0


def test_n2_mean():
    stats = empirical_height_stats(2, 20000, SEED)
    assert abs(stats.mean - 1.6) <= 4 * stats.stderr


def test_n6_mean_within_three_stderr():
    stats = empirical_height_stats(6, 50000, SEED)
    assert abs(stats.mean - float(average_height_exact(6))) <= 3 * stats.stderr
