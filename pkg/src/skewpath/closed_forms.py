"""Closed forms for the total generating function ``S(z)``.

``S = 1 + 2 z S^2 + z (S - 1)``, i.e. ``S = (1 - z - sqrt(1 - 10z + 9z^2)) / (4z)``.
Under ``z = u / ((1+u)(1+4u))`` it becomes ``1 + 2u``, and Lagrange-style
coefficient extraction turns ``[z^n] S`` into four weighted trinomial numbers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .series import Polynomial, Series

GROWTH = 9
COEFF_CONST = 3 / (2 * math.sqrt(2))
HEIGHT_CONST = 2 * math.sqrt(2) / 3


@dataclass(frozen=True)
class AsymptoticConstants:
    growth: int = GROWTH
    coeff_const: float = COEFF_CONST
    height_const: float = HEIGHT_CONST


@dataclass(frozen=True)
class SubstitutionPoint:
    u: Fraction
    z: Fraction

    @classmethod
    def at(cls, u: Fraction | int) -> SubstitutionPoint:
        u = Fraction(u)
        return cls(u, z_of_u(u))


def z_of_u(u: Fraction) -> Fraction:
    return u / ((1 + u) * (1 + 4 * u))


@dataclass
class CheckReport:
    """Outcome of an identity check; a failure is data, not an exception."""

    name: str
    passed: bool
    order: int
    first_failure: int | None = None
    detail: str = ""
    parts: list[CheckReport] = field(default_factory=list)

    def as_dict(self) -> dict:
        d = {
            "name": self.name,
            "passed": self.passed,
            "order": self.order,
            "first_failure": self.first_failure,
            "detail": self.detail,
        }
        if self.parts:
            d["parts"] = [p.as_dict() for p in self.parts]
        return d


def compare(name: str, lhs: Series, rhs: Series, order: int, detail: str = "") -> CheckReport:
    """Compare two series on their first ``order`` coefficients."""
    avail = min(lhs.order, rhs.order)
    if avail < order:
        return CheckReport(name, False, order, avail, f"only {avail} coefficients available")
    k = lhs.truncate(order).first_difference(rhs.truncate(order))
    if k is None:
        return CheckReport(name, True, order, None, detail)
    return CheckReport(name, False, order, k, f"[{k}]: {lhs[k]} != {rhs[k]}")


def combine(name: str, parts: list[CheckReport], order: int) -> CheckReport:
    failed = [p for p in parts if not p.passed]
    first = failed[0].first_failure if failed else None
    detail = "; ".join(f"{p.name}: {p.detail}" for p in failed)
    return CheckReport(name, not failed, order, first, detail, parts)


def s_series(order: int) -> Series:
    """``S(z)`` to the given order, via the radical form."""
    if order < 1:
        raise ValueError("order must be at least 1")
    radicand = Series([1, -10, 9], order + 1)
    numer = Series([1, -1], order + 1) - radicand.sqrt()
    s = numer.shift(-1) / 4
    s.integers()
    return s


def s_series_functional(order: int) -> Series:
    """``S(z)`` solved coefficientwise from ``S = 1 + 2zS^2 + z(S - 1)``."""
    s = [1]
    for n in range(1, order):
        conv = sum(s[i] * s[n - 1 - i] for i in range(n))
        s.append(2 * conv + s[n - 1] - (1 if n == 1 else 0))
    return Series(s, order)


def functional_equation_residual(order: int) -> Series:
    s = s_series(order)
    z = Series.monomial(1, order)
    return s - 1 - 2 * z * s * s - z * (s - 1)


def weighted_trinomial(m: int, k: int) -> int:
    """``[v^k] (1 + 5v + 4v^2)^m`` as ``sum_j 4^j C(m, j) C(m, k - j)``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if k < 0 or k > 2 * m:
        return 0
    return sum(4**j * math.comb(m, j) * math.comb(m, k - j) for j in range(max(0, k - m), min(k, m) + 1))


@lru_cache(maxsize=4096)
def s_coefficient(n: int) -> int:
    """``[z^n] S`` via the four-term weighted trinomial formula (``n = 0`` gives 1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    m = n - 1
    t = weighted_trinomial
    return t(m, n) + 2 * t(m, n - 1) - 4 * t(m, n - 2) - 8 * t(m, n - 3)


def z_of_u_series(order: int) -> Series:
    """``u / ((1+u)(1+4u))`` as a power series in ``u``."""
    return Series.monomial(1, order) / Series([1, 5, 4], order)


def substitution_identity_check(order: int, perturb: Series | None = None) -> CheckReport:
    """Check ``S(z(u)) = 1 + 2u`` up to ``u^(order-1)``.

    ``perturb`` is added to ``z(u)`` first (mutation testing).
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    zu = z_of_u_series(order)
    if perturb is not None:
        zu = zu + perturb
    lhs = s_series(order).compose(zu)
    return compare("substitution", lhs, Series([1, 2], order), order)


def log_coefficient_asymptotic(n: int) -> float:
    if n < 1:
        raise ValueError("n must be at least 1")
    return math.log(COEFF_CONST) + n * math.log(GROWTH) - 1.5 * math.log(n) - 0.5 * math.log(math.pi)


def coefficient_asymptotic(n: int) -> float:
    """Leading-order estimate of ``[z^n] S``; raises OverflowError past float range."""
    return math.exp(log_coefficient_asymptotic(n))


def coefficient_ratio(n: int) -> float:
    """``s_coefficient(n) / coefficient_asymptotic(n)``, evaluated in log domain."""
    return math.exp(math.log(s_coefficient(n)) - log_coefficient_asymptotic(n))


def trinomial_power(m: int) -> Polynomial:
    return Polynomial([1, 5, 4]) ** m
