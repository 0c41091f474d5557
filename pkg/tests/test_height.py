from fractions import Fraction

import pytest

from skewpath.closed_forms import s_coefficient
from skewpath.height import (
    LambdaPoint,
    average_height_asymptotic,
    average_height_exact,
    average_height_refined,
    bounded_counts,
    height_distribution,
    ph_qh_closed_check,
    recursion_residual,
    sh_ratfn,
    tail_formula_check,
)
from skewpath.closed_forms import SubstitutionPoint
from skewpath.levels import level_dp
from skewpath.paths import count_by_height
from skewpath.series import Polynomial, Series


def test_sh_small_cases():
    s0 = sh_ratfn(0)
    assert s0.p == Polynomial([1]) and s0.q == Polynomial([1])
    s1 = sh_ratfn(1)
    assert s1.p == Polynomial([1]) and s1.q == Polynomial([1, -2])
    assert bounded_counts(1, 8) == [2**n for n in range(8)]
    s2 = sh_ratfn(2)
    assert s2.p == Polynomial([1, -2, 2]) and s2.q == Polynomial([1, -4])
    assert s2.expand(4).integers() == [1, 2, 10, 40]


def test_sh_degree_and_constant_invariants():
    for h in range(15):
        gf = sh_ratfn(h)
        assert gf.p[0] == gf.q[0] == 1
        assert gf.p.degree <= h and gf.q.degree <= h


def test_bounded_counts_against_capped_dp():
    order = 21
    for h in range(13):
        dp = level_dp(2 * order, level_cutoff=h).total(0)
        assert bounded_counts(h, order) == [int(dp[2 * n]) for n in range(order)]


def test_monotone_and_stabilising():
    for n in range(21):
        row = [bounded_counts(h, 21)[n] for h in range(14)]
        assert row == sorted(row)
        assert row[-1] <= s_coefficient(n)
        for h in range(n, 14):
            assert row[h] == s_coefficient(n)


def test_recursion_residual_vanishes():
    for h in range(1, 11):
        assert recursion_residual(h, 20) == Series.zero(20)


@pytest.mark.parametrize(
    "n, expected",
    [(0, {0: 1}), (2, {1: 4, 2: 6}), (3, {1: 8, 2: 32, 3: 18})],
)
def test_height_distribution_examples(n, expected):
    assert height_distribution(n).counts == expected


@pytest.mark.parametrize("n", range(9))
def test_height_distribution_against_brute_force(n):
    dist = height_distribution(n)
    assert dist.counts == count_by_height(n)
    assert dist.total == s_coefficient(n)


@pytest.mark.parametrize("n, expected", [(1, Fraction(1)), (2, Fraction(8, 5)), (3, Fraction(63, 29))])
def test_average_height_exact(n, expected):
    assert average_height_exact(n) == expected


def test_average_matches_brute_force():
    for n in range(1, 8):
        dist = count_by_height(n)
        brute = Fraction(sum(h * c for h, c in dist.items()), sum(dist.values()))
        assert average_height_exact(n) == brute


def test_asymptotic_formula():
    assert average_height_asymptotic(1) == pytest.approx(0.9428090415820634 * 1.7724538509055159)


def test_refined_constant_tracks_exact_averages():
    # exact / ((5 sqrt 2 / 6) sqrt(pi n)) climbs towards 1 from below
    r = [float(average_height_exact(n)) / average_height_refined(n) for n in (25, 50, 100)]
    assert r[0] < r[1] < r[2] < 1


def test_lambda_and_z_at_critical_point():
    assert LambdaPoint.at(Fraction(1, 2)).lam == 1
    assert SubstitutionPoint.at(Fraction(1, 2)).z == Fraction(1, 9)


@pytest.mark.parametrize("h, order", [(0, 6), (2, 12), (5, 20)])
def test_tail_formula(h, order):
    assert tail_formula_check(h, order).passed


def test_tail_formula_h0_is_substitution():
    assert tail_formula_check(0, 10).passed


def test_tail_formula_detects_wrong_height():
    # the closed form for h=3 must not match S - S_2
    from skewpath.height import tail_closed_series
    from skewpath.closed_forms import s_series, z_of_u_series

    zu = z_of_u_series(14)
    gf = sh_ratfn(2)
    lhs = s_series(14).compose(zu) - gf.p(zu) / gf.q(zu)
    assert lhs != tail_closed_series(3, 14)


@pytest.mark.parametrize("h, order", [(0, 8), (1, 10), (3, 14)])
def test_ph_qh_closed(h, order):
    assert ph_qh_closed_check(h, order).passed
