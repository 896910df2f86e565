"""The shortlex injective code on admissible strings.

Admissible strings are listed by increasing information cost, then length,
then lexicographically; nonempty binary words are listed in shortlex order;
the ``j``-th string is mapped to the ``j``-th word.  Both ranks are computed
arithmetically, so encoding a block of length ``n`` costs ``O(n)`` big-integer
operations and never enumerates the language.

Ranks are 1-based on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .combinatorics import (
    Binomials,
    class_size,
    class_slices,
    cumulative_below,
    shorter_in_class,
)
from .source import ALPHABET, HIGH, SUCCESSORS, check_admissible, information_cost


def binary_rank(b: str) -> int:
    if not b:
        raise ValueError("binary word must be nonempty")
    if any(c not in "01" for c in b):
        raise ValueError(f"not a binary word: {b!r}")
    return (1 << len(b)) - 1 + int(b, 2)


def binary_unrank(j: int) -> str:
    if j < 1:
        raise ValueError("rank must be >= 1")
    length = (j + 1).bit_length() - 1
    return format(j + 1 - (1 << length), f"0{length}b")


def _word_length(j: int) -> int:
    return (j + 1).bit_length() - 1


_slice_offset = lru_cache(maxsize=4096)(shorter_in_class)


class _SliceCounter:
    """Completions inside one (cost, length) slice, position by position.

    With ``r`` symbols still to follow and ``b`` C/D symbols still owed to the
    non-final positions (counting the one being chosen), choosing a symbol of
    class AB leaves ``2 * comb(r-1, b) * 2**b`` completions and a C/D symbol
    leaves ``2 * comb(r-1, b-1) * 2**b``.
    """

    def __init__(self) -> None:
        self._low = Binomials()
        self._high = Binomials()

    def count(self, symbol: str, remaining: int, budget: int) -> int:
        if remaining == 0:
            return 1 if budget == 0 else 0
        if symbol in HIGH:
            c = self._high(remaining - 1, budget - 1)
        else:
            c = self._low(remaining - 1, budget)
        return c << (budget + 1)


def _lex_index(u: str, budget: int) -> int:
    """0-based position of ``u`` among same-length strings with ``budget``
    interior C/D symbols."""
    counter = _SliceCounter()
    idx = 0
    n = len(u)
    choices = ALPHABET
    for i, s in enumerate(u):
        remaining = n - 1 - i
        for c in choices:
            if c == s:
                break
            idx += counter.count(c, remaining, budget)
        if remaining and s in HIGH:
            budget -= 1
        choices = SUCCESSORS[s]
    return idx


def _lex_unindex(idx: int, length: int, budget: int) -> str:
    counter = _SliceCounter()
    out = []
    choices = ALPHABET
    for i in range(length):
        remaining = length - 1 - i
        for c in choices:
            cnt = counter.count(c, remaining, budget)
            if idx < cnt:
                break
            idx -= cnt
        else:
            raise AssertionError("index outside slice")
        out.append(c)
        if remaining and c in HIGH:
            budget -= 1
        choices = SUCCESSORS[c]
    return "".join(out)


def source_rank(u: str) -> int:
    check_admissible(u)
    k = information_cost(u)
    n = len(u)
    return cumulative_below(k) + _slice_offset(n, k) + _lex_index(u, k - n - 1) + 1


def _locate_class(j: int) -> int:
    """Cost ``k`` with ``cumulative_below(k) < j <= cumulative_below(k + 1)``."""
    k = max(2, j.bit_length() - 1)
    while k > 2 and cumulative_below(k) >= j:
        k -= 1
    while cumulative_below(k + 1) < j:
        k += 1
    return k


def source_unrank(j: int) -> str:
    if j < 1:
        raise ValueError("rank must be >= 1")
    k = _locate_class(j)
    offset = j - cumulative_below(k) - 1
    binom = Binomials()
    for ell in class_slices(k):
        b = k - ell - 1
        size = 4 * binom(ell - 1, b) << b
        if offset < size:
            return _lex_unindex(offset, ell, b)
        offset -= size
    raise AssertionError("rank outside its cost class")


def encode(u: str) -> str:
    return binary_unrank(source_rank(u))


def decode(b: str) -> str:
    return source_unrank(binary_rank(b))


def code_length(u: str) -> int:
    """``len(encode(u))`` without building the codeword."""
    return _word_length(source_rank(u))


def is_short(u: str) -> bool:
    """Whether ``u`` gets the short codeword length ``K(u) - 1``."""
    k = information_cost(u)
    return source_rank(u) - cumulative_below(k) <= class_size(k) // 2


@dataclass(frozen=True)
class Codebook:
    entries: tuple[tuple[str, str], ...]
    max_cost: int

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[str, str]]:
        return iter(self.entries)

    def as_dict(self) -> dict[str, str]:
        return dict(self.entries)

    def dumps(self) -> str:
        """One ``SOURCE<TAB>CODEWORD`` line per entry, in source order."""
        return "".join(f"{s}\t{w}\n" for s, w in self.entries)

    @classmethod
    def loads(cls, text: str) -> Codebook:
        entries = []
        for line in text.splitlines():
            if line.strip():
                s, w = line.split("\t")
                entries.append((s, w))
        max_cost = max((information_cost(s) for s, _ in entries), default=1)
        return cls(tuple(entries), max_cost)


def _strings_up_to_cost(max_cost: int) -> list[tuple[int, str]]:
    out = []
    stack = [(c, 2) for c in ALPHABET]
    while stack:
        s, cost = stack.pop()
        if cost > max_cost:
            continue
        out.append((cost, s))
        step = 2 if s[-1] in HIGH else 1
        for c in SUCCESSORS[s[-1]]:
            stack.append((s + c, cost + step))
    return out


def brute_force_codebook(max_cost: int) -> Codebook:
    """Enumerate every admissible string of cost at most ``max_cost``, sort it
    and pair it with shortlex binary words.  Independent of the rank code."""
    if max_cost < 2:
        raise ValueError("max_cost must be >= 2")
    items = _strings_up_to_cost(max_cost)
    items.sort(key=lambda cs: (cs[0], len(cs[1]), cs[1]))
    words = []
    length, value = 1, 0
    for _ in items:
        words.append(format(value, f"0{length}b"))
        value += 1
        if value == 1 << length:
            length, value = length + 1, 0
    return Codebook(tuple((s, w) for (_, s), w in zip(items, words)), max_cost)
