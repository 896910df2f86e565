"""Exact counts of admissible strings by cost, length and prefix.

Notation used throughout (all integers):

* ``class_size(k)``: admissible strings of information cost ``k``.
* ``slice_count(k, l)``: those of cost ``k`` and length ``l``.
* ``u_count(m, j) = comb(m - j, j) * 2**j``, the kernel behind the slices,
  ``slice_count(k, l) == 4 * u_count(k - 2, k - l - 1)``.
* ``central_C/D/B/A``: the alternating sums that control the saving
  probability near the centre of the binomial cost distribution.
"""

from __future__ import annotations

import csv
import io
from math import comb
from typing import Iterable


def class_size(k: int) -> int:
    if k < 2:
        raise ValueError("cost classes start at k = 2")
    return ((1 << (k + 1)) + (4 if k % 2 == 0 else -4)) // 3


def class_size_recurrence(k: int) -> int:
    """Same as :func:`class_size`, via ``S_k = S_{k-1} + 2 S_{k-2}``."""
    if k < 2:
        raise ValueError("cost classes start at k = 2")
    a, b = 4, 4
    for _ in range(k - 3):
        a, b = b, b + 2 * a
    return a if k == 2 else b


def cumulative_below(k: int) -> int:
    """Admissible strings with cost strictly below ``k``."""
    if k < 2:
        raise ValueError("cost classes start at k = 2")
    # (2^k - 2) - T_{<k} = S_k / 2
    return (1 << k) - 2 - class_size(k) // 2


def u_count(m: int, j: int) -> int:
    if j < 0 or 2 * j > m:
        return 0
    return comb(m - j, j) << j


def slice_count(k: int, length: int) -> int:
    j = k - length - 1
    if length < 1 or j < 0 or j > length - 1:
        return 0
    return 4 * comb(length - 1, j) << j


def shorter_in_class(n: int, k: int) -> int:
    """Cost-``k`` strings with length below ``n``."""
    binom = Binomials()
    total = 0
    for ell in class_slices(k):
        if ell >= n:
            break
        j = k - ell - 1
        total += binom(ell - 1, j) << j
    return 4 * total


def short_codewords_left(n: int, k: int) -> int:
    """Short (length ``k - 1``) codewords still free when the length-``n``
    slice of class ``k`` starts.  Signed; negative means none are left."""
    return class_size(k) // 2 - shorter_in_class(n, k)


def class_slices(k: int) -> range:
    """Lengths with a nonempty slice in class ``k``."""
    return range((k + 1) // 2, k)


class Binomials:
    """``comb(n, k)`` for a slowly drifting ``(n, k)``.

    Successive queries that move ``n`` and ``k`` by a few dozen units are answered
    by exact ratio updates from the previous value; anything else falls back
    to :func:`math.comb`.  Walks along a row or diagonal of Pascal's triangle
    then cost one small multiply and divide per step.
    """

    __slots__ = ("n", "k", "value")

    def __init__(self) -> None:
        self.n = -1
        self.k = 0
        self.value = 0

    def __call__(self, n: int, k: int) -> int:
        if n == self.n and k == self.k:
            return self.value
        if n < 0 or k < 0 or k > n:
            return 0
        if self.value and abs(n - self.n) + abs(k - self.k) <= 64:
            v, n0, k0 = self.value, self.n, self.k
            while n0 < n:
                n0 += 1
                v = v * n0 // (n0 - k0)
            while k0 > k:
                v = v * k0 // (n0 - k0 + 1)
                k0 -= 1
            while k0 < k:
                v = v * (n0 - k0) // (k0 + 1)
                k0 += 1
            while n0 > n:
                v = v * (n0 - k0) // n0
                n0 -= 1
        else:
            v = comb(n, k)
        self.n, self.k, self.value = n, k, v
        return v


START = "START"
AB = "AB"
CD = "CD"


def prefix_completions(state: str, remaining: int, cd_budget: int) -> int:
    """Admissible continuations of ``remaining`` symbols with a given C/D count.

    ``state`` is the class (``"AB"`` or ``"CD"``) of the current last symbol,
    or ``"START"`` when nothing has been emitted.  ``cd_budget`` counts C/D
    symbols over the non-final positions among the current one (unless it is
    final, i.e. ``remaining == 0``) and the appended ones.

    Each non-final C/D symbol doubles the choices for its successor inside a
    prescribed class, and the final symbol may land in either class, so for
    ``remaining >= 1`` the count is ``2 * comb(r - 1, b - [state == CD]) * 2**b``.

    >>> prefix_completions(START, 2, 0)
    4
    """
    if state == START:
        if remaining == 0:
            return 1 if cd_budget == 0 else 0
        return 2 * (
            prefix_completions(AB, remaining - 1, cd_budget)
            + prefix_completions(CD, remaining - 1, cd_budget)
        )
    if state not in (AB, CD):
        raise ValueError(f"unknown state {state!r}")
    if remaining == 0:
        return 1 if cd_budget == 0 else 0
    free = cd_budget - (state == CD)
    if cd_budget < 0 or free < 0 or free > remaining - 1:
        return 0
    return 2 * comb(remaining - 1, free) << cd_budget


def central_C(t: int) -> int:
    if t < 0:
        raise ValueError("t must be >= 0")
    return comb(2 * t, t) << t


def central_C_table(t_max: int) -> list[int]:
    """``[C_0, ..., C_t_max]`` using ``C_t = C_{t-1} * 4(2t-1)/t``."""
    out = [1]
    for t in range(1, t_max + 1):
        out.append(out[-1] * 4 * (2 * t - 1) // t)
    return out


def central_D_table(t_max: int) -> list[int]:
    """``[D_0, ..., D_t_max]`` with ``D_0 = 0`` and ``D_t = C_{t-1} - D_{t-1}``."""
    cs = central_C_table(t_max)
    out = [0]
    for t in range(1, t_max + 1):
        out.append(cs[t - 1] - out[-1])
    return out


def central_D(t: int) -> int:
    """``C_{t-1} - C_{t-2} + ... + (-1)^(t-1) C_0``."""
    if t < 1:
        raise ValueError("t must be >= 1")
    cs = central_C_table(t - 1)
    return sum(cs[t - i] if i % 2 else -cs[t - i] for i in range(1, t + 1))


def _split_sum(m: int, lo_end: int, hi_start: int) -> int:
    """``sum_{j < lo_end} U(m, j) - sum_{j >= hi_start} U(m, j)``."""
    low = sum(u_count(m, j) for j in range(0, lo_end))
    high = sum(u_count(m, j) for j in range(hi_start, m // 2 + 1))
    return low - high


def central_D_direct(t: int) -> int:
    if t < 1:
        raise ValueError("t must be >= 1")
    return _split_sum(3 * t, t, t + 1)


def central_B(t: int) -> int:
    if t < 1:
        raise ValueError("t must be >= 1")
    return central_C(t) // 2 - central_D(t)


def central_B_direct(t: int) -> int:
    if t < 1:
        raise ValueError("t must be >= 1")
    return _split_sum(3 * t - 1, t, t + 1)


def central_A(t: int) -> int:
    if t < 1:
        raise ValueError("t must be >= 1")
    return _split_sum(3 * t - 2, t - 1, t)


def to_csv(values: Iterable[int], start: int = 0) -> str:
    """``index,value`` CSV with values as decimal integer strings."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "value"])
    for i, v in enumerate(values, start):
        w.writerow([i, str(v)])
    return buf.getvalue()
