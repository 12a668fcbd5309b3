"""Exact polynomial and truncated-power-series arithmetic.

Every scalar in this package is a `fractions.Fraction`; no floating point
appears anywhere. This module also provides the classical sequences the
characteristic-class formulas consume: Bernoulli numbers, Chebyshev
polynomials of the first kind, and the Taylor expansion of x/(1 - e^-x).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd, isqrt
from typing import Iterable, Iterator


class Poly:
    """Dense univariate polynomial over the rationals.

    Coefficients are indexed by exponent and trailing zeros are trimmed,
    so the representation is canonical. Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int | float:
        """Index of the last nonzero coefficient; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly | Fraction | int") -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly | Fraction | int") -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "Poly | Fraction | int") -> "Poly":
        return _as_poly(other) + (-self)

    def __mul__(self, other: "Poly | Fraction | int") -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Fraction | int) -> "Poly":
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Poly([1])
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, point: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """Substitute `inner` for the variable."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def pretty(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}{var}" + (f"^{i}" if i > 1 else "")
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"


def _as_poly(value: Poly | Fraction | int) -> Poly:
    return value if isinstance(value, Poly) else Poly([value])


def binomial_poly(scale: Fraction | int, shift: Fraction | int, n: int) -> Poly:
    """The binomial coefficient C(scale*t + shift, n) expanded as a polynomial in t.

    Equals prod_{i=0}^{n-1} (scale*t + shift - i) / n!.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = Poly([1])
    for i in range(n):
        p = p * Poly([Fraction(shift) - i, Fraction(scale)])
    return p / factorial(n)


@lru_cache(maxsize=None)
def chebyshev_t(k: int) -> Poly:
    """Chebyshev polynomial of the first kind, via T_{m+1} = 2t*T_m - T_{m-1}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    prev, cur = Poly([1]), Poly([0, 1])
    if k == 0:
        return prev
    two_t = Poly([0, 2])
    for _ in range(k - 1):
        prev, cur = cur, two_t * cur - prev
    return cur


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m in the convention B_1 = -1/2.

    Computed from sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_0 = 1. Only even
    indices are consumed downstream, where both sign conventions agree.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return Fraction(1)
    return -sum(comb(m + 1, j) * bernoulli(j) for j in range(m)) / (m + 1)


def modified_bernoulli(m: int) -> Fraction:
    """B_m / (2m * m!) for even m >= 2 (written b_m with m = 2k)."""
    if m < 2 or m % 2:
        raise ValueError("defined for even m >= 2")
    return bernoulli(m) / (2 * m * factorial(m))


class Series:
    """Power series truncated (inclusively) at a fixed order.

    The truncation order is a per-object field; binary operations require
    equal orders so precision never degrades silently.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Fraction | int], order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs = tuple(cs)
        self.order = order

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i <= self.order else Fraction(0)

    def _check(self, other: "Series") -> None:
        if self.order != other.order:
            raise ValueError("truncation orders differ")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return Series((a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __sub__(self, other: "Series") -> "Series":
        self._check(other)
        return Series((a - b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __mul__(self, other: "Series | Fraction | int") -> "Series":
        if isinstance(other, (int, Fraction)):
            return Series((c * other for c in self.coeffs), self.order)
        self._check(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(out, self.order)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        """Multiplicative inverse; requires constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("inverse requires constant term 1")
        inv = [Fraction(1)] + [Fraction(0)] * self.order
        for n in range(1, self.order + 1):
            inv[n] = -sum(self.coeffs[i] * inv[n - i] for i in range(1, n + 1))
        return Series(inv, self.order)

    def log(self) -> "Series":
        """Logarithm of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        u = Series([1], self.order) - self
        result = Series([], self.order)
        power = Series([1], self.order)
        for i in range(1, self.order + 1):
            power = power * u
            result = result - power * Fraction(1, i)
        return result

    def exp(self) -> "Series":
        """Exponential of a series with constant term 0."""
        if self.coeffs[0]:
            raise ValueError("exp requires constant term 0")
        result = Series([1], self.order)
        power = Series([1], self.order)
        for i in range(1, self.order + 1):
            power = power * self
            result = result + power * Fraction(1, factorial(i))
        return result

    def __repr__(self) -> str:
        return f"Series([{', '.join(str(c) for c in self.coeffs)}], order={self.order})"


def todd_series(order: int) -> Series:
    """Taylor expansion of x/(1 - e^-x), the Todd-class generating series."""
    denominator = Series(
        (Fraction((-1) ** i, factorial(i + 1)) for i in range(order + 1)), order
    )
    return denominator.inverse()


def _divisors(n: int) -> Iterator[int]:
    n = abs(n)
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            yield d
            if d != n // d:
                yield n // d


def rational_roots(p: Poly) -> list[Fraction]:
    """All distinct rational roots of p.

    Clears denominators and tests every candidate num/den with num dividing
    the constant term and den dividing the leading term. Exact and exhaustive.
    """
    if not p:
        raise ValueError("the zero polynomial vanishes identically")
    denom_lcm = 1
    for c in p.coeffs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in p.coeffs]
    roots: set[Fraction] = set()
    low = 0
    while ints[low] == 0:
        low += 1
    if low:
        roots.add(Fraction(0))
        ints = ints[low:]
    if len(ints) > 1:
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                if gcd(num, den) != 1:
                    continue
                for candidate in (Fraction(num, den), Fraction(-num, den)):
                    if p(candidate) == 0:
                        roots.add(candidate)
    return sorted(roots)
