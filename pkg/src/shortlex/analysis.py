"""Exact saving probabilities and expected code lengths.

For a block of length ``n`` the codeword length is ``K - I`` where ``K`` is the
information cost and ``I`` indicates a short codeword, so
``E[L_n] = 3n/2 + 1/2 - P(I_n = 1)``.  The interior C/D count of the block is
``Binomial(n - 1, 1/2)``, and conditioned on it being ``x`` the block is uniform
on the length-``n`` slice of cost class ``k = n + 1 + x``, of which a clamped
fraction ``V/N`` receive short codewords.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import comb

from . import codec
from .combinatorics import (
    Binomials,
    central_C,
    central_D,
    central_B,
    class_size,
    short_codewords_left,
    slice_count,
)
from .source import BitSource, admissible_strings, block_probability, draw_block

HALF = Fraction(1, 2)
DECIMAL_DIGITS = 12


def binomial_weight(n: int, x: int) -> Fraction:
    """``P(X = x)`` for the interior C/D count ``X ~ Bin(n - 1, 1/2)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if x < 0 or x > n - 1:
        return Fraction(0)
    return Fraction(comb(n - 1, x), 1 << (n - 1))


def conditional_saving(n: int, x: int) -> Fraction:
    """``P(I_n = 1 | X = x)``, straight from the slice counts."""
    if n < 2:
        raise ValueError("conditional saving is defined for n >= 2")
    if not 0 <= x <= n - 1:
        raise ValueError(f"x must lie in [0, {n - 1}], got {x}")
    k = n + 1 + x
    v = short_codewords_left(n, k)
    size = slice_count(k, n)
    return min(Fraction(1), max(Fraction(0), Fraction(v, size)))


def saturation_start(n: int) -> int:
    """Smallest integer ``x`` with ``x >= (n + 1) / 2``."""
    return (n + 2) // 2


def saving_probability(n: int) -> Fraction:
    """Exact ``P(I_n = 1)``.

    Writes ``m = n + x - 1`` and ``F(m, x) = sum_{j <= x} U(m, j)``.  The free
    short codewords are ``V = 4 F(n+x-1, x) - S_k / 2`` and the slice has
    ``N = 4 comb(n-1, x) 2^x`` strings, so an unclamped term ``p_n(x) V/N``
    collapses to ``V / 2^k``.  The prefix sums are carried across ``x`` by
    ``U(m+1, j) = U(m, j) + 2 U(m-1, j-1)``; every ``x`` at or past the
    saturation point contributes its full binomial weight.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return HALF
    top = 2 * n
    acc = 0
    row = Binomials()
    diag = Binomials()
    f_cur, f_prev = 1, 1  # F(n+x-1, x), F(n+x-2, x)
    stop = min(saturation_start(n), n)
    for x in range(stop):
        k = n + 1 + x
        w = row(n - 1, x)
        v = 4 * f_cur - class_size(k) // 2
        if v >= (4 * w) << x:
            acc += w << (n + 1)
        elif v > 0:
            acc += v << (top - k)
        u_next = diag(n - 2, x + 1) << (x + 1)
        f_cur, f_prev = f_cur + u_next + 2 * f_prev, f_cur + u_next
    for x in range(stop, n):
        acc += row(n - 1, x) << (n + 1)
    return Fraction(acc, 1 << top)


def saving_probability_direct(n: int) -> Fraction:
    """``sum_x p_n(x) g_n(x)`` term by term; slow reference route."""
    if n == 1:
        return HALF
    return sum(
        (binomial_weight(n, x) * conditional_saving(n, x) for x in range(n)),
        Fraction(0),
    )


def entropy(n: int) -> Fraction:
    """``H(X_1^n) = E[K_n] = 3n/2 + 1/2``."""
    return Fraction(3 * n + 1, 2)


def benchmark(n: int) -> Fraction:
    return Fraction(3 * n, 2)


def expected_length(n: int) -> Fraction:
    return entropy(n) - saving_probability(n)


BRUTEFORCE_MAX_N = 8


def expected_length_bruteforce(n: int) -> Fraction:
    """``sum_u P(u) |C(u)|`` over every length-``n`` block, using the
    enumerated codebook rather than the rank arithmetic."""
    if not 1 <= n <= BRUTEFORCE_MAX_N:
        raise ValueError(f"brute force supports 1 <= n <= {BRUTEFORCE_MAX_N}")
    book = codec.brute_force_codebook(2 * n).as_dict()
    return sum(
        (block_probability(u) * len(book[u]) for u in admissible_strings(n)),
        Fraction(0),
    )


def saving_lower_bound(n: int) -> Fraction:
    """The central-term lower bound on ``P(I_n = 1)``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    t = n // 2
    ratio = Fraction(central_D(t), central_C(t))
    if n % 2:
        return HALF + binomial_weight(n, t) * ratio / 2
    return HALF + binomial_weight(n, t) * ratio


@dataclass(frozen=True)
class CentralConditionals:
    odd_center: Fraction  # g_{2t+1}(t)
    even_center: Fraction  # g_{2t}(t)
    even_left: Fraction  # g_{2t}(t-1)


def central_conditionals(t: int) -> CentralConditionals:
    if t < 1:
        raise ValueError("t must be >= 1")
    c, d, b = central_C(t), central_D(t), central_B(t)
    return CentralConditionals(
        odd_center=HALF + Fraction(d, 2 * c),
        even_center=HALF + Fraction(b, c),
        even_left=Fraction(2 * d, c),
    )


def tail_saturation_check(n: int) -> bool:
    if n < 2:
        raise ValueError("n must be >= 2")
    return all(conditional_saving(n, x) == 1 for x in range(saturation_start(n), n))


def to_decimal(q: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 10
        d = Decimal(q.numerator) / Decimal(q.denominator)
    return f"{d:.{digits}g}"


def fmt_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class SavingReport:
    n: int
    saving_prob: Fraction
    expected_length: Fraction
    entropy: Fraction
    benchmark: Fraction
    gap: Fraction

    @classmethod
    def for_length(cls, n: int) -> SavingReport:
        p = saving_probability(n)
        h = entropy(n)
        bench = benchmark(n)
        return cls(n, p, h - p, h, bench, bench - (h - p))

    def gap_times_sqrt_n(self, digits: int = DECIMAL_DIGITS) -> str:
        with localcontext() as ctx:
            ctx.prec = digits + 10
            d = Decimal(self.gap.numerator) / Decimal(self.gap.denominator)
            d *= Decimal(self.n).sqrt()
        text = f"{d:.{digits}g}"
        if "." in text and "e" not in text:
            text = text.rstrip("0").rstrip(".")
        return text

    def as_record(self) -> dict[str, object]:
        """Machine-readable row; rationals as ``p/q`` strings."""
        return {
            "n": self.n,
            "saving_prob": fmt_fraction(self.saving_prob),
            "expected_length": fmt_fraction(self.expected_length),
            "benchmark": fmt_fraction(self.benchmark),
            "gap": fmt_fraction(self.gap),
            "gap_times_sqrt_n": self.gap_times_sqrt_n(),
        }


TABLE_FIELDS = ("n", "saving_prob", "expected_length", "benchmark", "gap", "gap_times_sqrt_n")


def gap_table(n_max: int) -> list[SavingReport]:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return [SavingReport.for_length(n) for n in range(1, n_max + 1)]


def gap_at_least(n: int, c: Fraction) -> bool:
    """Exact test of ``gap(n) * sqrt(n) >= c`` for ``c >= 0``."""
    g = benchmark(n) - expected_length(n)
    return g >= 0 and g * g * n >= c * c


def central_bound_scaled(t: int) -> float:
    """``q_t D_t / (2 C_t) * sqrt(2t + 1)``, the odd-length lower bound on
    ``gap * sqrt(n)``."""
    q = Fraction(comb(2 * t, t), 1 << (2 * t))
    return float(q * Fraction(central_D(t), 2 * central_C(t))) * (2 * t + 1) ** 0.5


# Monte Carlo

MC_CHUNK = 4096


@dataclass(frozen=True)
class McEstimate:
    n: int
    samples: int
    mean: float
    std_error: float
    seed: int

    def within(self, target: Fraction, k: float = 5.0) -> bool:
        return abs(self.mean - float(target)) <= k * self.std_error


def chunk_seed(seed: int, index: int) -> int:
    """64-bit seed for chunk ``index``: first 8 bytes of SHA-256 of ``"seed:index"``."""
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "little")


def _length_sums(args: tuple[int, int, int]) -> tuple[int, int]:
    n, count, seed = args
    bits = BitSource(seed)
    s = s2 = 0
    for _ in range(count):
        ell = codec.code_length(draw_block(bits, n))
        s += ell
        s2 += ell * ell
    return s, s2


def monte_carlo_length(n: int, samples: int, seed: int, workers: int = 1) -> McEstimate:
    """Sample mean and standard error of the codeword length of ``X_1^n``.

    Samples are drawn in chunks of :data:`MC_CHUNK`, chunk ``i`` from the
    stream seeded by :func:`chunk_seed`; sums are merged in chunk order, so
    the result depends only on ``(n, samples, seed)``, not on ``workers``.
    """
    if n < 1 or samples < 1:
        raise ValueError("n and samples must be >= 1")
    jobs = []
    for i, start in enumerate(range(0, samples, MC_CHUNK)):
        jobs.append((n, min(MC_CHUNK, samples - start), chunk_seed(seed, i)))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_length_sums, jobs))
    else:
        parts = [_length_sums(j) for j in jobs]
    s = sum(p[0] for p in parts)
    s2 = sum(p[1] for p in parts)
    mean = Fraction(s, samples)
    if samples > 1:
        var = (Fraction(s2) - samples * mean * mean) / (samples - 1)
        se = float(var / samples) ** 0.5
    else:
        se = 0.0
    return McEstimate(n, samples, float(mean), se, seed)
