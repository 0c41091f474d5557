"""Paths of bounded height and the exact and asymptotic average height.

``S_h``, the generating function of paths of height at most ``h``, obeys
``S_h = (1 - z + z S_{h-1}) / (1 - 2z S_{h-1})`` with ``S_0 = 1``.  Writing
``S_h = p_h / q_h`` gives the linear recursion

    p_h = (1 - z) q_{h-1} + z p_{h-1},    q_h = q_{h-1} - 2z p_{h-1}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .closed_forms import HEIGHT_CONST, CheckReport, combine, compare, s_coefficient, s_series, z_of_u_series
from .series import Polynomial, RationalFn, Series, ratfn_expand


@dataclass(frozen=True)
class BoundedHeightGF:
    h: int
    p: Polynomial
    q: Polynomial

    @property
    def ratfn(self) -> RationalFn:
        return RationalFn(self.p, self.q)

    def expand(self, order: int) -> Series:
        return ratfn_expand(self.ratfn, order)


@dataclass(frozen=True)
class HeightDistribution:
    n: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class LambdaPoint:
    u: Fraction
    lam: Fraction

    @classmethod
    def at(cls, u: Fraction | int) -> LambdaPoint:
        u = Fraction(u)
        return cls(u, lambda_of_u(u))


def lambda_of_u(u: Fraction) -> Fraction:
    return (4 * u + 3) * u / (3 * u + 1)


@lru_cache(maxsize=None)
def _pq(h: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # integer coefficient tuples; cached so the whole family is built once
    if h == 0:
        return (1,), (1,)
    p, q = _pq(h - 1)
    n = max(len(p), len(q)) + 1
    pp = [0] * n
    qq = [0] * n
    for k, c in enumerate(q):
        pp[k] += c
        pp[k + 1] -= c
        qq[k] += c
    for k, c in enumerate(p):
        pp[k + 1] += c
        qq[k + 1] -= 2 * c
    while len(pp) > 1 and pp[-1] == 0:
        pp.pop()
    while len(qq) > 1 and qq[-1] == 0:
        qq.pop()
    return tuple(pp), tuple(qq)


def sh_ratfn(h: int) -> BoundedHeightGF:
    if h < 0:
        raise ValueError("h must be non-negative")
    p, q = _pq(h)
    return BoundedHeightGF(h, Polynomial(p), Polynomial(q))


def _expand_int(p: tuple[int, ...], q: tuple[int, ...], order: int) -> list[int]:
    # q[0] == 1 throughout the family
    qt = q[1:]
    out: list[int] = []
    for k in range(order):
        acc = p[k] if k < len(p) else 0
        for j in range(min(k, len(qt))):
            acc -= qt[j] * out[k - 1 - j]
        out.append(acc)
    return out


def bounded_counts(h: int, order: int) -> list[int]:
    """``[z^n] S_h`` for ``n < order``."""
    p, q = _pq(h)
    return _expand_int(p, q, order)


@lru_cache(maxsize=64)
def _at_most(n: int) -> tuple[int, ...]:
    # [z^n] S_h for h = 0..n; S_n already equals S at this coefficient
    return tuple(bounded_counts(h, n + 1)[n] for h in range(n + 1))


def height_distribution(n: int) -> HeightDistribution:
    """Number of paths of semilength ``n`` with each exact height, by differencing ``S_h``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return HeightDistribution(0, {0: 1})
    below = _at_most(n)
    counts = {h: below[h] - below[h - 1] for h in range(1, n + 1)}
    return HeightDistribution(n, {h: c for h, c in counts.items() if c})


def average_height_exact(n: int) -> Fraction:
    """Mean height over all paths of semilength ``n``, as an exact fraction.

    Computed both as ``sum h * count_h / total`` and as the tail sum
    ``sum_{h >= 0} [z^n](S - S_h) / [z^n] S``; the two must agree.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    total = s_coefficient(n)
    below = _at_most(n)
    if below[n] != total:
        raise ArithmeticError(f"S_{n} does not stabilise at s_{n}")
    weighted = sum(h * (below[h] - below[h - 1]) for h in range(1, n + 1))
    tail = sum(total - below[h] for h in range(n))
    if weighted != tail:
        raise ArithmeticError("weighted and tail forms of the average disagree")
    return Fraction(weighted, total)


def average_height_asymptotic(n: int) -> float:
    """Leading-order average height ``(2 sqrt 2 / 3) sqrt(pi n)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return HEIGHT_CONST * math.sqrt(math.pi * n)


def average_height_ratio(n: int) -> float:
    return float(average_height_exact(n)) / average_height_asymptotic(n)


def lambda_series(order: int) -> Series:
    """``(4u + 3) u / (3u + 1)`` in powers of ``u``."""
    return Series([0, 3, 4], order) / Series([1, 3], order)


def tail_closed_series(h: int, order: int) -> Series:
    """``2u (1 - 4u^2) lambda^h / (1 - 4u^2 lambda^h)`` in powers of ``u``."""
    lam_h = lambda_series(order) ** h
    four_u2 = Series([0, 0, 4], order)
    return Series([0, 2, 0, -8], order) * lam_h / (1 - four_u2 * lam_h)


def tail_formula_check(h: int, order: int) -> CheckReport:
    """``S - S_h`` composed with ``z(u)`` against the closed ``lambda`` form."""
    if h < 0 or order < 2:
        raise ValueError("need h >= 0 and order >= 2")
    zu = z_of_u_series(order)
    gf = sh_ratfn(h)
    s_h = gf.p(zu) / gf.q(zu)
    lhs = s_series(order).compose(zu) - s_h
    return compare(f"tail[h={h}]", lhs, tail_closed_series(h, order), order)


def ph_qh_closed(h: int, order: int) -> tuple[Series, Series]:
    """The closed forms of ``p_h(z(u))`` and ``q_h(z(u))`` as ``u``-series."""
    base = Series([1, 5, 4], order).reciprocal()
    a = Series([0, 3, 4], order) * base
    b = Series([1, 3], order) * base
    ah, bh = a**h, b**h
    one_m_2u = Series([1, -2], order).reciprocal()
    one_m_4u2 = Series([1, 0, -4], order).reciprocal()
    p = (Series([0, -2], order) * ah + bh) * one_m_2u
    q = (Series([0, 0, -4], order) * ah + bh) * one_m_4u2
    return p, q


def ph_qh_closed_check(h: int, order: int) -> CheckReport:
    zu = z_of_u_series(order)
    gf = sh_ratfn(h)
    p_closed, q_closed = ph_qh_closed(h, order)
    parts = [
        compare(f"p[h={h}]", gf.p(zu), p_closed, order),
        compare(f"q[h={h}]", gf.q(zu), q_closed, order),
    ]
    return combine(f"ph_qh[h={h}]", parts, order)


def recursion_residual(h: int, order: int) -> Series:
    """``q_h (1 - z + z S_{h-1}) - p_h (1 - 2z S_{h-1})``, identically zero."""
    if h < 1:
        raise ValueError("h must be at least 1")
    prev = sh_ratfn(h - 1).expand(order)
    cur = sh_ratfn(h)
    z = Series.monomial(1, order)
    return cur.q.to_series(order) * (1 - z + z * prev) - cur.p.to_series(order) * (1 - 2 * z * prev)


# The leading term of the tail sum: with eps = 1 - 2u, the factor
# (1 - 4u^2)/(2u) is ~ 2 eps while 1 - lambda ~ (4/5) eps, so the sum over h
# behaves like -(5/2) log eps = -(5/4) log(1 - 9z).  Dividing by the
# coefficients of S gives this constant in place of 2 sqrt 2 / 3.
REFINED_HEIGHT_CONST = 5 * math.sqrt(2) / 6


def average_height_refined(n: int) -> float:
    """``(5 sqrt 2 / 6) sqrt(pi n)``, the leading term the exact averages converge to."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return REFINED_HEIGHT_CONST * math.sqrt(math.pi * n)
