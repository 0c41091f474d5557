"""Generating functions of path prefixes by end level and last-step class.

Here ``z`` marks single steps (length, not semilength).  For each level ``i``:

* ``f_i`` counts prefixes ending at ``i`` whose last step is up (``f_0 = 1``
  holds the empty prefix),
* ``g_i`` those ending with a coloured down-step (two colours),
* ``h_i`` those ending with the red down-step.

``mu1 = (1 + z^2 + sqrt(1 - 10z^2 + 9z^4)) / (2z)`` is the large root of the
kernel ``z u^2 - (1 + z^2) u + z(3 - 2z^2)``; ``1/mu1`` is a genuine power
series and everything below is expressed through it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .closed_forms import CheckReport, combine, compare, s_series
from .series import Polynomial, RationalFn, Series, ratfn_expand

ONE_PLUS_Z2 = Polynomial([1, 0, 1])
THREE_MINUS_2Z2 = Polynomial([3, 0, -2])
RADICAND = Polynomial([1, 0, -10, 0, 9])
# transposed-coefficient variant of RADICAND; kept for mutation checks
MISPRINTED_RADICAND = Polynomial([1, 0, -9, 0, 10])


@dataclass
class LevelTable:
    order: int
    rows: list[tuple[Series, Series, Series]]

    @property
    def max_level(self) -> int:
        return len(self.rows) - 1

    def f(self, i: int) -> Series:
        return self._row(i)[0]

    def g(self, i: int) -> Series:
        return self._row(i)[1]

    def h(self, i: int) -> Series:
        return self._row(i)[2]

    def total(self, i: int) -> Series:
        f, g, h = self._row(i)
        return f + g + h

    def _row(self, i: int) -> tuple[Series, Series, Series]:
        if 0 <= i < len(self.rows):
            return self.rows[i]
        zero = Series.zero(self.order)
        return zero, zero, zero


def level_dp(order: int, level_cutoff: int | None = None) -> LevelTable:
    """Count prefixes of length ``< order`` by end state, one step at a time.

    With ``level_cutoff = K`` no prefix may rise above level ``K``.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    top = max(order - 1, 0)
    if level_cutoff is not None:
        top = min(top, level_cutoff)
    width = top + 1
    f = [[0] * order for _ in range(width)]
    g = [[0] * order for _ in range(width)]
    h = [[0] * order for _ in range(width)]
    # current-length state vectors; the empty prefix sits in f_0
    cf = [0] * width
    cg = [0] * width
    ch = [0] * width
    if order:
        cf[0] = 1
    for length in range(order):
        for i in range(width):
            f[i][length] = cf[i]
            g[i][length] = cg[i]
            h[i][length] = ch[i]
        nf = [0] * width
        ng = [0] * width
        nh = [0] * width
        for i in range(width):
            a, b, c = cf[i], cg[i], ch[i]
            if i + 1 < width:
                nf[i + 1] += a + b
            if i > 0:
                ng[i - 1] += 2 * (a + b + c)
                nh[i - 1] += b + c
        cf, cg, ch = nf, ng, nh
    rows = [(Series(f[i], order), Series(g[i], order), Series(h[i], order)) for i in range(width)]
    return LevelTable(order, rows)


def inv_mu1_series(order: int) -> Series:
    """``1/mu1 = 2z / (1 + z^2 + sqrt(1 - 10z^2 + 9z^4))``; starts ``z + 2z^3 + 8z^5``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    root = RADICAND.to_series(order).sqrt()
    x = Series.monomial(1, order, 2) / (ONE_PLUS_Z2.to_series(order) + root)
    x.integers()
    return x


def z_mu1_series(order: int) -> Series:
    """``z * mu1 = (1 + z^2 + sqrt(...)) / 2``, constant term 1."""
    return (ONE_PLUS_Z2.to_series(order) + RADICAND.to_series(order).sqrt()) / 2


def z_mu2_series(order: int) -> Series:
    """``z * mu2 = z (3 - 2z^2) / mu1``, using ``mu1 * mu2 = 3 - 2z^2``."""
    return Series.monomial(1, order) * THREE_MINUS_2Z2.to_series(order) * inv_mu1_series(order)


def level_closed(i: int, order: int) -> tuple[Series, Series, Series]:
    """``(f_i, g_i, h_i)`` from the kernel-method closed forms."""
    if i < 0:
        raise ValueError("level must be non-negative")
    x = inv_mu1_series(order + 1)
    xi = x**i
    xi1 = xi * x
    z = Series.monomial(1, order + 1)
    f = xi.truncate(order)
    g = xi1.shift(-1) - xi
    h = -xi / 2 - z * xi1 + xi1.shift(-1) / 2
    for s in (f, g, h):
        s.integers()
    return f, g.truncate(order), h.truncate(order)


def level_total_closed(i: int, order: int) -> Series:
    """``f_i + g_i + h_i = -(1/2) mu1^-i - (z - 3/(2z)) mu1^-(i+1)``."""
    x = inv_mu1_series(order + 1)
    xi = x**i
    xi1 = xi * x
    z = Series.monomial(1, order + 1)
    total = -xi / 2 - z * xi1 + xi1.shift(-1) * Fraction(3, 2)
    return total.truncate(order)


def s_of_zsq_display(order: int, radicand: Polynomial = RADICAND) -> Series:
    """``(1 - z^2 - sqrt(radicand)) / (4 z^2)`` to the given order."""
    r = radicand.to_series(order + 2).sqrt()
    return ((Series([1, 0, -1], order + 2) - r).shift(-2) / 4).truncate(order)


def s_of_zsq_identity_check(order: int, radicand: Polynomial = RADICAND) -> CheckReport:
    """``f_0 + g_0 + h_0 = S(z^2)`` from the DP, the closed forms and the radical display."""
    if order < 2:
        raise ValueError("order must be at least 2")
    target = s_series((order + 1) // 2).subs_power(2).truncate(order)
    dp = level_dp(order, level_cutoff=order).total(0)
    f, g, h = level_closed(0, order)
    parts = [
        compare("dp", dp, target, order),
        compare("closed", f + g + h, target, order),
        compare("display", s_of_zsq_display(order, radicand), target, order),
    ]
    return combine("s_of_zsq", parts, order)


def level_agreement_check(i_max: int, order: int) -> CheckReport:
    """DP table against the closed forms for every level ``0..i_max``."""
    table = level_dp(order)
    parts = []
    for i in range(i_max + 1):
        f, g, h = level_closed(i, order)
        parts.append(compare(f"f{i}", table.f(i), f, order))
        parts.append(compare(f"g{i}", table.g(i), g, order))
        parts.append(compare(f"h{i}", table.h(i), h, order))
        parts.append(compare(f"total{i}", table.total(i), level_total_closed(i, order), order))
    return combine("level_closed", parts, order)


def kernel_check(order: int) -> CheckReport:
    """``z - (1 + z^2) x + z (3 - 2z^2) x^2 = 0`` for ``x = 1/mu1``."""
    x = inv_mu1_series(order)
    z = Series.monomial(1, order)
    residual = z - ONE_PLUS_Z2.to_series(order) * x + z * THREE_MINUS_2Z2.to_series(order) * x * x
    return compare("kernel", residual, Series.zero(order), order)


# Boundary rows of the three banded systems, as (first, second, rhs) with the
# rhs already multiplied by z so every entry is a polynomial:
#   first * x_0 + second * x_1 = rhs / z
# The g row differs from the printed one; see G_BOUNDARY_PRINTED.
G_BOUNDARY = (Polynomial([-1, 0, 2, 0, -2]), Polynomial([0, 3, 0, -2]), Polynomial([0, 0, 0, -2, 0, 2]))
G_BOUNDARY_PRINTED = (Polynomial([2, 0, -3]), Polynomial([0, 3, 0, -2]), Polynomial([2, 0, -2]))
H_BOUNDARY = (
    Polynomial([-1, 0, 4]),
    Polynomial([0, 3, 0, -8, 0, 4]),
    Polynomial([0, 0, 0, 0, 0, -2]),
)


def _boundary_residual(row, x0: Series, x1: Series) -> Series:
    first, second, rhs = row
    order = min(x0.order, x1.order)
    z = Series.monomial(1, order + 1)
    lhs = z * (first.to_series(order) * x0 + second.to_series(order) * x1)
    return (lhs - rhs.to_series(order + 1)).truncate(order)


def three_term_check(i_max: int, order: int) -> CheckReport:
    """Three-term recurrences on the DP table plus the three boundary rows."""
    if i_max < 2:
        raise ValueError("i_max must be at least 2")
    table = level_dp(order)
    z = Series.monomial(1, order)
    a = z
    b = -ONE_PLUS_Z2.to_series(order)
    c = z * THREE_MINUS_2Z2.to_series(order)
    zero = Series.zero(order)
    parts = []
    for name, getter in (("f", table.f), ("g", table.g), ("h", table.h)):
        for i in range(i_max - 1):
            res = a * getter(i) + b * getter(i + 1) + c * getter(i + 2)
            parts.append(compare(f"{name}{i}", res, zero, order))
    # f row: -(1 + z^2) f_0 + z (3 - 2z^2) f_1 = -z mu1
    f_res = b * table.f(0) + c * table.f(1) + z_mu1_series(order)
    parts.append(compare("f_boundary", f_res, zero, order))
    parts.append(compare("g_boundary", _boundary_residual(G_BOUNDARY, table.g(0), table.g(1)), zero, order))
    parts.append(compare("h_boundary", _boundary_residual(H_BOUNDARY, table.h(0), table.h(1)), zero, order))
    return combine("three_term", parts, order)


def boundary_check(kind: str, order: int, printed: bool = False) -> CheckReport:
    table = level_dp(order)
    if kind == "g":
        row = G_BOUNDARY_PRINTED if printed else G_BOUNDARY
        res = _boundary_residual(row, table.g(0), table.g(1))
    elif kind == "h":
        res = _boundary_residual(H_BOUNDARY, table.h(0), table.h(1))
    else:
        raise ValueError(f"unknown boundary {kind!r}")
    return compare(f"{kind}_boundary", res, Series.zero(order), order)


def dk_polynomial(k: int) -> Polynomial:
    """Determinant of the ``k x k`` tridiagonal block, by its two-term recursion."""
    if k < 0:
        raise ValueError("K must be non-negative")
    prev, cur = Polynomial([1]), -ONE_PLUS_Z2
    if k == 0:
        return prev
    z2_coef = Polynomial([0, 0, 1]) * THREE_MINUS_2Z2
    for _ in range(k - 1):
        prev, cur = cur, -ONE_PLUS_Z2 * cur - z2_coef * prev
    return cur


def dk_closed_series(k: int, order: int) -> Series:
    """``((-z mu2)^(K+1) - (-z mu1)^(K+1)) / sqrt(1 - 10z^2 + 9z^4)``."""
    a = -z_mu1_series(order)
    b = -z_mu2_series(order)
    inv_root = RADICAND.to_series(order).sqrt().reciprocal()
    return (b ** (k + 1) - a ** (k + 1)) * inv_root


def dk_ratio_series(k: int, order: int) -> Series:
    """``D_{K-1} / D_K`` by the continued-fraction recursion from ``-1/(1+z^2)``."""
    if k < 1:
        raise ValueError("K must be at least 1")
    minus_b = ONE_PLUS_Z2.to_series(order)
    c = Series([0, 0, 3, 0, -2], order)
    r = -minus_b.reciprocal()
    for _ in range(k - 1):
        r = (-minus_b - c * r).reciprocal()
    return r


def dk_closed_check(k_max: int, order: int) -> CheckReport:
    if k_max < 1:
        raise ValueError("K_max must be at least 1")
    parts = []
    for k in range(k_max + 1):
        parts.append(compare(f"D{k}", dk_closed_series(k, order), dk_polynomial(k).to_series(order), order))
    for k in range(1, k_max + 1):
        direct = dk_polynomial(k - 1).to_series(order) / dk_polynomial(k).to_series(order)
        parts.append(compare(f"ratio{k}", dk_ratio_series(k, order), direct, order))
    return combine("dk_closed", parts, order)


def _cramer(k: int, row) -> RationalFn:
    """``z * x_0^[K]`` for the truncated system with first row ``row``.

    The determinant of the ``(K+1)``-row matrix is
    ``first * D_K - z * second * D_{K-1}``; the rhs carries an extra factor z.
    """
    if k < 1:
        raise ValueError("K must be at least 1")
    first, second, rhs = row
    dk, dk1 = dk_polynomial(k), dk_polynomial(k - 1)
    return RationalFn(rhs * dk, first * dk - Polynomial([0, 1]) * second * dk1)


def truncated_solution(k: int, order: int) -> tuple[Series, Series]:
    """``(g_0^[K], h_0^[K])`` by Cramer's rule on the ``K+1``-row banded systems.

    The leading ``1/z`` is removed as an exact valuation shift.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    g = ratfn_expand(_cramer(k, G_BOUNDARY), order + 1).shift(-1)
    h = ratfn_expand(_cramer(k, H_BOUNDARY), order + 1).shift(-1)
    return g, h


# A height cap of M leaves h_{M-1} = h_M = 0 and every h-row below intact, so
# the K+1-row h-system is exactly the cap M = K + 2.
H_TRUNCATION_OFFSET = 2


def continued_fraction_g0(k: int, order: int) -> Series:
    """``g_0^[K] = (b_0 / first) / (1 - z * second / first * D_{K-1}/D_K)``.

    The determinant ratio comes from the continued-fraction recursion, not
    from the determinant polynomials.
    """
    first, second, rhs = G_BOUNDARY
    n = order + 1
    r = dk_ratio_series(k, n)
    denom = first.to_series(n) - Series.monomial(1, n) * second.to_series(n) * r
    return (rhs.to_series(n) / denom).shift(-1)


def truncation_check(k_max: int, order: int) -> CheckReport:
    """Cramer against the continued fraction (g) and against the capped DP (h)."""
    parts = []
    for k in range(1, k_max + 1):
        g, h = truncated_solution(k, order)
        parts.append(compare(f"g0[{k}]~cf", g, continued_fraction_g0(k, order), order))
        capped = level_dp(order, level_cutoff=k + H_TRUNCATION_OFFSET)
        parts.append(compare(f"h0[{k}]~dp", h, capped.h(0), order))
    return combine("truncation", parts, order)


def g_truncation_dp_check(k_max: int, order: int) -> CheckReport:
    """Cramer ``g_0^[K]`` against the DP with level cap ``K``."""
    parts = []
    for k in range(1, k_max + 1):
        g, _ = truncated_solution(k, order)
        parts.append(compare(f"g0[{k}]~dp", g, level_dp(order, level_cutoff=k).g(0), order))
    return combine("g_truncation_dp", parts, order)
