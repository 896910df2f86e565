"""Truncated formal power series with exact rational coefficients.

Used as an oracle: the closed-form generating functions for the central
sums are expanded here by series arithmetic alone and compared coefficient
by coefficient with the direct integer sums in :mod:`shortlex.combinatorics`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Number = int | Fraction


class PowerSeries:
    """``sum_i coeffs[i] z**i`` known exactly up to ``z**order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence[Number], order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        c = [Fraction(x) for x in coeffs[: order + 1]]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.coeffs = c
        self.order = order

    @classmethod
    def constant(cls, c: Number, order: int) -> PowerSeries:
        return cls([c], order)

    @classmethod
    def monomial(cls, c: Number, power: int, order: int) -> PowerSeries:
        return cls([0] * power + [c], order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return self.order + 1

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def _coerce(self, other: PowerSeries | Number) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.order)

    def __add__(self, other: PowerSeries | Number) -> PowerSeries:
        o = self._coerce(other)
        n = min(self.order, o.order)
        return PowerSeries([a + b for a, b in zip(self.coeffs[: n + 1], o.coeffs)], n)

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other: PowerSeries | Number) -> PowerSeries:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Number) -> PowerSeries:
        return (-self) + other

    def __mul__(self, other: PowerSeries | Number) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            f = Fraction(other)
            return PowerSeries([a * f for a in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def reciprocal(self) -> PowerSeries:
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        out = [1 / a0]
        for i in range(1, self.order + 1):
            s = sum(self.coeffs[j] * out[i - j] for j in range(1, i + 1))
            out.append(-s / a0)
        return PowerSeries(out, self.order)

    def __truediv__(self, other: PowerSeries | Number) -> PowerSeries:
        if not isinstance(other, PowerSeries):
            return self * (1 / Fraction(other))
        return self * other.reciprocal()

    def __rtruediv__(self, other: Number) -> PowerSeries:
        return self.reciprocal() * other

    def power(self, alpha: Number) -> PowerSeries:
        """``self ** alpha`` for rational ``alpha`` and constant term 1.

        Expands ``(1 + h) ** alpha = sum_i binom(alpha, i) h**i``.
        """
        if self.coeffs[0] != 1:
            raise ValueError("binomial series needs constant term 1")
        alpha = Fraction(alpha)
        h = self - 1
        out = PowerSeries.constant(1, self.order)
        term = PowerSeries.constant(1, self.order)
        binom = Fraction(1)
        for i in range(1, self.order + 1):
            term = term * h
            binom = binom * (alpha - i + 1) / i
            out = out + term * binom
        return out

    def sqrt(self) -> PowerSeries:
        return self.power(Fraction(1, 2))

    def shift_down(self, k: int = 1) -> PowerSeries:
        """Divide by ``z**k``; the dropped coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValueError(f"series is not divisible by z^{k}")
        return PowerSeries(self.coeffs[k:], self.order - k)

    def truncate(self, order: int) -> PowerSeries:
        return PowerSeries(self.coeffs, min(order, self.order))

    def integer_coefficients(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("series has non-integral coefficients")
        return [int(c) for c in self.coeffs]


SERIES_NAMES = ("C", "D", "B", "T", "P", "X")


def series(which: str, order: int) -> PowerSeries:
    """Expansion of one of the closed-form generating functions.

    ``C = (1-8z)^(-1/2) - 1``, ``D = z / ((1+z) sqrt(1-8z))``,
    ``B = ((1-z) / ((1+z) sqrt(1-8z)) - 1) / 2``,
    ``T = (16z/(1-8z) - z/(1+z)) / 3``,
    ``P = (1 - sqrt(1-8z) - 2z) / (2 (1+z)(1-8z))`` and
    ``X = (1 - 4z - sqrt(1-8z)) / (4z)``.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if which not in SERIES_NAMES:
        raise ValueError(f"unknown series {which!r}; expected one of {', '.join(SERIES_NAMES)}")
    n = order + 1 if which == "X" else order
    one = PowerSeries.constant(1, n)
    z = PowerSeries.monomial(1, 1, n)
    s = one - 8 * z
    if which == "C":
        return s.power(Fraction(-1, 2)) - 1
    if which == "D":
        return z / (1 + z) * s.power(Fraction(-1, 2))
    if which == "B":
        return ((1 - z) / (1 + z) * s.power(Fraction(-1, 2)) - 1) * Fraction(1, 2)
    if which == "T":
        return (16 * z / s - z / (1 + z)) * Fraction(1, 3)
    if which == "P":
        return (1 - s.sqrt() - 2 * z) / (2 * (1 + z) * s)
    return ((1 - 4 * z - s.sqrt()) / 4).shift_down(1)
