"""Truncated power series and polynomials over exact rationals.

A :class:`Series` stores the coefficients ``[z^0] .. [z^(order-1)]``; everything
from ``z^order`` on is unknown, not zero.  Arithmetic never produces
coefficients past the smallest truncation order of its operands.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    BadConstantTerm,
    DivisibilityViolation,
    IntegralityViolation,
    NonUnitConstantTerm,
    NonzeroInnerConstant,
)

Number = Union[int, Fraction]


def _frac(c: Number) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Series:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = cs[:order]
        cs.extend([Fraction(0)] * (order - len(cs)))
        self.coeffs: list[Fraction] = cs
        self.order = order

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls([1], order)

    @classmethod
    def monomial(cls, k: int, order: int, c: Number = 1) -> Series:
        return cls([0] * k + [c], order)

    @classmethod
    def from_poly(cls, p: Polynomial | Sequence[Number], order: int) -> Series:
        coeffs = p.coeffs if isinstance(p, Polynomial) else p
        return cls(coeffs, order)

    # -- basic protocol -----------------------------------------------------

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient {k} is beyond truncation order {self.order}")
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"Series([{terms}{more}], order={self.order})"

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return Series(self.coeffs[:order], order)

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def first_difference(self, other: Series) -> int | None:
        """Index of the first differing coefficient within the common order."""
        for k in range(min(self.order, other.order)):
            if self.coeffs[k] != other.coeffs[k]:
                return k
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integers(self) -> list[int]:
        """Coefficients as Python ints; raises if any has a denominator."""
        for k, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise IntegralityViolation(f"[z^{k}] = {c} is not an integer")
        return [c.numerator for c in self.coeffs]

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other: object) -> Series:
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series([other], self.order)
        if isinstance(other, Polynomial):
            return Series(other.coeffs, self.order)
        raise TypeError(f"cannot combine Series with {type(other).__name__}")

    def __add__(self, other: object) -> Series:
        b = self._coerce(other)
        n = min(self.order, b.order)
        return Series([self.coeffs[k] + b.coeffs[k] for k in range(n)], n)

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other: object) -> Series:
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> Series:
        return self._coerce(other) - self

    def __mul__(self, other: object) -> Series:
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs], self.order)
        b = self._coerce(other)
        n = min(self.order, b.order)
        a_nz = [(i, c) for i, c in enumerate(self.coeffs[:n]) if c]
        b_nz = [(j, c) for j, c in enumerate(b.coeffs[:n]) if c]
        out = [Fraction(0)] * n
        for i, ca in a_nz:
            for j, cb in b_nz:
                if i + j >= n:
                    break
                out[i + j] += ca * cb
        return Series(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Series:
        if isinstance(other, (int, Fraction)):
            return Series([c / other for c in self.coeffs], self.order)
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other: object) -> Series:
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, k: int) -> Series:
        if k < 0:
            return self.reciprocal() ** (-k)
        result = Series.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> Series:
        """Multiply by ``z**k``; negative ``k`` divides and requires divisibility."""
        if k >= 0:
            return Series([0] * k + self.coeffs, self.order + k)
        k = -k
        if k > self.order:
            raise DivisibilityViolation(f"order {self.order} too small to divide by z^{k}")
        for i in range(k):
            if self.coeffs[i]:
                raise DivisibilityViolation(f"[z^{i}] = {self.coeffs[i]} != 0; not divisible by z^{k}")
        return Series(self.coeffs[k:], self.order - k)

    # -- analytic-style operations -------------------------------------------

    def reciprocal(self) -> Series:
        a = self.coeffs
        n = self.order
        if n == 0:
            return Series([], 0)
        if not a[0]:
            raise NonUnitConstantTerm("constant term is zero; series is not invertible")
        inv0 = 1 / a[0]
        b = [inv0]
        for k in range(1, n):
            acc = Fraction(0)
            for j in range(1, k + 1):
                if a[j]:
                    acc += a[j] * b[k - j]
            b.append(-acc * inv0)
        return Series(b, n)

    def sqrt(self) -> Series:
        """Square root with constant term 1, by the recurrence read off ``b*b = a``."""
        a = self.coeffs
        n = self.order
        if n == 0:
            return Series([], 0)
        if a[0] != 1:
            raise BadConstantTerm(f"constant term must be 1, got {a[0]}")
        b = [Fraction(1)]
        for k in range(1, n):
            acc = Fraction(0)
            for j in range(1, k):
                acc += b[j] * b[k - j]
            b.append((a[k] - acc) / 2)
        return Series(b, n)

    def compose(self, inner: Series) -> Series:
        """``self(inner)`` for ``inner`` with zero constant term.

        The result is exact up to ``min(order(self) * v, order(inner))`` where
        ``v`` is the valuation of ``inner``.
        """
        if inner.order and inner.coeffs[0]:
            raise NonzeroInnerConstant(f"inner constant term {inner.coeffs[0]} != 0")
        v = inner.valuation()
        if v is None:
            n = inner.order
            return Series([self.coeffs[0]] if self.order else [], n if self.order else 0)
        n = min(self.order * v, inner.order)
        inner = inner.truncate(n)
        result = Series.zero(n)
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def subs_power(self, k: int) -> Series:
        """``self(z**k)``, an exact spread of coefficients."""
        out = [Fraction(0)] * (self.order * k)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Series(out, self.order * k)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {"order": self.order, "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}
        )

    @classmethod
    def from_json(cls, text: str) -> Series:
        doc = json.loads(text)
        return cls([Fraction(s) for s in doc["coeffs"]], int(doc["order"]))


def series_arith(a: Series, b: Series, op: str) -> Series:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


class Polynomial:
    """Exact polynomial in one variable; trailing zero coefficients are dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: list[Fraction] = cs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def _coerce(self, other: object) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other: object) -> Polynomial:
        b = self._coerce(other)
        n = max(len(self.coeffs), len(b.coeffs))
        return Polynomial([self[k] + b[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: object) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other: object) -> Polynomial:
        if isinstance(other, Series):
            return NotImplemented
        b = self._coerce(other)
        if not self.coeffs or not b.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(b.coeffs) - 1)
        for i, ca in enumerate(self.coeffs):
            if ca:
                for j, cb in enumerate(b.coeffs):
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        result = Polynomial([1])
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> Polynomial:
        return Polynomial([0] * k + self.coeffs) if self.coeffs else Polynomial()

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, Series) else Series.zero(x.order)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_series(self, order: int) -> Series:
        return Series(self.coeffs, order)


Z = Polynomial([0, 1])


@dataclass(frozen=True)
class RationalFn:
    """``num / den`` kept exactly as produced; no gcd reduction."""

    num: Polynomial
    den: Polynomial

    def expand(self, order: int) -> Series:
        return ratfn_expand(self, order)


def ratfn_expand(r: RationalFn, order: int) -> Series:
    """Series of ``r.num / r.den`` to the given order.

    Integer polynomials with a unit constant term in the denominator take an
    all-integer path (same coefficients, no Fraction overhead).
    """
    den = r.den.coeffs
    if not den or not den[0]:
        raise NonUnitConstantTerm("denominator has zero constant term")
    num = r.num.coeffs
    all_int = all(c.denominator == 1 for c in num) and all(c.denominator == 1 for c in den)
    if all_int and den[0] in (1, -1):
        q = [int(c) for c in den]
        p = [int(c) for c in num]
        q0 = q[0]
        qt = q[1:]
        b: list[int] = []
        for k in range(order):
            acc = p[k] if k < len(p) else 0
            for j, qj in enumerate(qt[: k], start=1):
                if qj:
                    acc -= qj * b[k - j]
            b.append(acc * q0)
        return Series(b, order)
    return Series(num, order) * Series(den, order).reciprocal()
