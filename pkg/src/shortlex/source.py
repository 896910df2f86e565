"""The four-symbol constrained Markov source.

Symbols are the characters ``A < B < C < D``.  The chain starts uniformly,
``A`` moves to ``A`` or ``C`` and ``B`` moves to ``B`` or ``D`` with probability
1/2 each, and ``C``/``D`` move to any symbol uniformly.  Every admissible
block therefore has a dyadic probability ``2**-K`` where ``K`` is its
information cost.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from typing import Iterator

ALPHABET = "ABCD"
LOW = frozenset("AB")
HIGH = frozenset("CD")

SUCCESSORS = {
    "A": "AC",
    "B": "BD",
    "C": "ABCD",
    "D": "ABCD",
}


class InadmissibleError(ValueError):
    """Raised when a string is not in the source language."""


def transition_allowed(x: str, y: str) -> bool:
    return y in SUCCESSORS[x]


def is_admissible(s: str) -> bool:
    if not s or any(c not in SUCCESSORS for c in s):
        return False
    return all(transition_allowed(a, b) for a, b in zip(s, s[1:]))


def check_admissible(s: str) -> str:
    """Return ``s`` unchanged or raise :class:`InadmissibleError` naming the fault."""
    if not isinstance(s, str):
        raise InadmissibleError(f"expected a string over {ALPHABET}, got {type(s).__name__}")
    if not s:
        raise InadmissibleError("empty string is not admissible")
    for i, c in enumerate(s):
        if c not in SUCCESSORS:
            raise InadmissibleError(f"symbol {c!r} at position {i + 1} is not in {ALPHABET}")
    for i, (a, b) in enumerate(zip(s, s[1:])):
        if not transition_allowed(a, b):
            raise InadmissibleError(
                f"forbidden transition {a}->{b} at positions {i + 1}-{i + 2}"
            )
    return s


def cd_count(u: str) -> int:
    """Number of non-final positions holding C or D."""
    check_admissible(u)
    return sum(c in HIGH for c in u[:-1])


def information_cost(u: str) -> int:
    """``-log2 P(X_1^n = u)``, which is ``len(u) + 1 + cd_count(u)``."""
    return len(u) + 1 + cd_count(u)


def transition_probability(x: str, y: str) -> Fraction:
    if not transition_allowed(x, y):
        return Fraction(0)
    return Fraction(1, len(SUCCESSORS[x]))


def block_probability(u: str) -> Fraction:
    check_admissible(u)
    p = Fraction(1, 4)
    for a, b in zip(u, u[1:]):
        p *= transition_probability(a, b)
    return p


def marginal_distribution(i: int) -> dict[str, Fraction]:
    """Exact law of ``X_i``, by pushing the initial law through the chain."""
    if i < 1:
        raise ValueError("position must be >= 1")
    dist = {x: Fraction(1, 4) for x in ALPHABET}
    for _ in range(i - 1):
        nxt = dict.fromkeys(ALPHABET, Fraction(0))
        for x, px in dist.items():
            for y in SUCCESSORS[x]:
                nxt[y] += px * transition_probability(x, y)
        dist = nxt
    return dist


def admissible_strings(length: int) -> Iterator[str]:
    """All admissible strings of the given length, in lexicographic order."""
    if length < 1:
        return
    for first in ALPHABET:
        yield from _extend(first, length - 1)


def _extend(prefix: str, remaining: int) -> Iterator[str]:
    if remaining == 0:
        yield prefix
        return
    for c in SUCCESSORS[prefix[-1]]:
        yield from _extend(prefix + c, remaining - 1)


def all_strings(length: int) -> Iterator[str]:
    """Every string over the alphabet of the given length, admissible or not."""
    return ("".join(p) for p in product(ALPHABET, repeat=length))


class BitSource:
    """Fair bits drawn from a seeded Mersenne Twister (:class:`random.Random`).

    Bits are taken least-significant first from successive 64-bit words of
    ``Random(seed).getrandbits(64)``; a request for ``k`` bits consumes exactly
    ``k`` bits of that stream.
    """

    def __init__(self, seed: int):
        if not 0 <= seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self._rng = random.Random(seed)
        self._word = 0
        self._avail = 0

    def bits(self, k: int) -> int:
        if self._avail < k:
            self._word |= self._rng.getrandbits(64) << self._avail
            self._avail += 64
        out = self._word & ((1 << k) - 1)
        self._word >>= k
        self._avail -= k
        return out


def draw_block(bits: BitSource, n: int) -> str:
    """One length-``n`` block from the chain.

    The first symbol uses 2 bits (``ALPHABET[v]``).  From A or B one bit picks
    the lower (0) or upper (1) successor; from C or D two bits index ``ALPHABET``.
    """
    if n < 1:
        raise ValueError("block length must be >= 1")
    out = [ALPHABET[bits.bits(2)]]
    for _ in range(n - 1):
        succ = SUCCESSORS[out[-1]]
        out.append(succ[bits.bits(2 if len(succ) == 4 else 1)])
    return "".join(out)


def sample_block(n: int, seed: int) -> str:
    """Deterministic sample of ``X_1^n`` for a given seed."""
    return draw_block(BitSource(seed), n)
