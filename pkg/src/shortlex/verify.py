"""Named invariant checks, grouped into suites for ``shortlex verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Iterator

from . import analysis, codec
from . import combinatorics as cb
from .powerseries import series
from .source import admissible_strings, block_probability, information_cost

SUITES = ("identities", "codec", "analysis")


@dataclass(frozen=True)
class Depth:
    max_cost: int = 14
    max_string_length: int = 10
    max_word_length: int = 14
    order_cost: int = 12
    n_max: int = 200
    tail_n_max: int = 200
    weight_n_max: int = 200
    t_max: int = 40
    asymptotic: bool = False


DEPTHS = {
    "default": Depth(),
    "deep": Depth(n_max=2000, weight_n_max=600, t_max=200, asymptotic=True),
}


@dataclass
class Check:
    name: str
    passed: bool
    counterexamples: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = "" if self.passed else "  counterexamples: " + "; ".join(self.counterexamples)
        return f"[{status}] {self.name}{tail}"


def _check(name: str, failures: Iterable[object], limit: int = 5) -> Check:
    bad = []
    for f in failures:
        bad.append(str(f))
        if len(bad) >= limit:
            break
    return Check(name, not bad, bad)


def identity_checks(d: Depth) -> Iterator[Check]:
    yield _check(
        "class_size closed form == recurrence (k <= 64)",
        (k for k in range(2, 65) if cb.class_size(k) != cb.class_size_recurrence(k)),
    )
    yield _check(
        "gap identity (2^k - 2) - T_<k == S_k/2 (k <= 64)",
        (k for k in range(2, 65)
         if (1 << k) - 2 - sum(cb.class_size(j) for j in range(2, k)) != cb.class_size(k) // 2),
    )
    yield _check(
        "slice decomposition sum_l N(k, l) == S_k (k <= 40)",
        (k for k in range(2, 41)
         if sum(cb.slice_count(k, ell) for ell in range(1, k)) != cb.class_size(k)),
    )
    yield _check(
        "U(m+1, j) == U(m, j) + 2 U(m-1, j-1) (m <= 60)",
        ((m, j) for m in range(0, 61) for j in range(-1, m + 2)
         if cb.u_count(m + 1, j) != cb.u_count(m, j) + 2 * cb.u_count(m - 1, j - 1)),
    )
    ts = range(1, d.t_max + 1)
    yield _check(
        f"D_t alternating sum == defining sum (t <= {d.t_max})",
        (t for t in ts if cb.central_D(t) != cb.central_D_direct(t)),
    )
    yield _check(
        f"B_t == C_t/2 - D_t == defining sum (t <= {d.t_max})",
        (t for t in ts if cb.central_B(t) != cb.central_B_direct(t)),
    )
    yield _check(
        f"D_t == 2 A_t + B_t (t <= {d.t_max})",
        (t for t in ts if cb.central_D(t) != 2 * cb.central_A(t) + cb.central_B(t)),
    )
    yield _check(
        f"0 < D_t < C_t/2 and 0 < B_t < C_t/2 (t <= {d.t_max})",
        (t for t in ts
         if not (0 < 2 * cb.central_D(t) < cb.central_C(t) and 0 < 2 * cb.central_B(t) < cb.central_C(t))),
    )
    order = 40
    expected: dict[str, Callable[[int], int]] = {
        "C": cb.central_C,
        "D": cb.central_D,
        "B": cb.central_B_direct,
        "T": lambda t: cb.class_size(3 * t + 2) // 4,
        "P": lambda t: sum(cb.u_count(3 * t, j) for j in range(t)),
    }
    for name, direct in expected.items():
        s = series(name, order)
        yield _check(
            f"series {name} coefficients match direct sums (order {order})",
            (t for t in range(1, order + 1) if s[t] != direct(t)),
        )
    yield _check(
        "0 < D_t/C_t - 1/9 < 1/(9t) (2 <= t <= 40)",
        (t for t in range(2, 41)
         if not 0 < Fraction(cb.central_D(t), cb.central_C(t)) - Fraction(1, 9) < Fraction(1, 9 * t)),
    )
    yield _check(
        "prefix_completions(START, l, j) == N(l+1+j, l) (l <= 10)",
        ((ell, j) for ell in range(1, 11) for j in range(ell)
         if cb.prefix_completions(cb.START, ell, j) != cb.slice_count(ell + 1 + j, ell)),
    )


def codec_checks(d: Depth) -> Iterator[Check]:
    strings = [u for n in range(1, d.max_string_length + 1) for u in admissible_strings(n)]
    yield _check(
        f"decode(encode(u)) == u for all |u| <= {d.max_string_length}",
        (u for u in strings if codec.decode(codec.encode(u)) != u),
    )
    words = (
        "".join(bits)
        for L in range(1, d.max_word_length + 1)
        for bits in product("01", repeat=L)
    )
    yield _check(
        f"encode(decode(b)) == b for all |b| <= {d.max_word_length}",
        (b for b in words if codec.encode(codec.decode(b)) != b),
    )
    book = codec.brute_force_codebook(d.max_cost)
    yield _check(
        f"encode agrees with brute-force codebook (cost <= {d.max_cost})",
        (f"{u}->{w}" for u, w in book if codec.encode(u) != w),
    )
    ordered = [u for u, _ in book if information_cost(u) <= d.order_cost]
    ranks = [codec.binary_rank(codec.encode(u)) for u in ordered]
    yield _check(
        f"order preservation (cost <= {d.order_cost})",
        (ordered[i] for i in range(1, len(ranks)) if ranks[i] <= ranks[i - 1]),
    )

    def dichotomy_failures() -> Iterator[str]:
        for k in range(2, d.max_cost + 1):
            lengths = [codec.code_length(u) for u, _ in book if information_cost(u) == k]
            half = cb.class_size(k) // 2
            if lengths.count(k - 1) != half or lengths.count(k) != half:
                yield f"k={k}"

    yield _check(f"length dichotomy with exact S_k/2 split (k <= {d.max_cost})", dichotomy_failures())


def _weight_total(n: int) -> Fraction:
    """``sum_x p_n(x)``, accumulated over the common denominator ``2^(n-1)``."""
    den = 1 << (n - 1)
    num = 0
    for x in range(n):
        w = analysis.binomial_weight(n, x)
        num += w.numerator * (den // w.denominator)
    return Fraction(num, den)


def analysis_checks(d: Depth) -> Iterator[Check]:
    golden = {1: Fraction(3, 2), 2: Fraction(23, 8), 3: Fraction(71, 16)}
    yield _check(
        "E[L_n] golden values 3/2, 23/8, 71/16",
        (n for n, v in golden.items() if analysis.expected_length(n) != v),
    )
    yield _check(
        "saving_probability(2) == 5/8",
        [analysis.saving_probability(2)] if analysis.saving_probability(2) != Fraction(5, 8) else [],
    )
    yield _check(
        "expected_length == brute force (n <= 8)",
        (n for n in range(1, 9) if analysis.expected_length(n) != analysis.expected_length_bruteforce(n)),
    )
    yield _check(
        "fast saving probability == term-by-term sum (n <= 60)",
        (n for n in range(1, 61)
         if analysis.saving_probability(n) != analysis.saving_probability_direct(n)),
    )
    probs = {n: analysis.saving_probability(n) for n in range(1, d.n_max + 1)}
    half = Fraction(1, 2)
    yield _check(
        f"P(I_n=1) >= 1/2, strict for n >= 2 (n <= {d.n_max})",
        (n for n, p in probs.items() if p < half or (n >= 2 and p == half)),
    )
    yield _check(
        f"P(I_n=1) >= central lower bound (n <= {d.n_max})",
        (n for n, p in probs.items() if n >= 2 and p < analysis.saving_lower_bound(n)),
    )
    yield _check(
        f"E[L_n] < 3n/2 for 2 <= n <= {d.n_max}, equality at n=1",
        (n for n, p in probs.items()
         if ((analysis.entropy(n) - p != analysis.benchmark(n)) if n == 1
             else analysis.entropy(n) - p >= analysis.benchmark(n))),
    )
    yield _check(
        f"sum_x p_n(x) == 1 (n <= {d.weight_n_max})",
        (n for n in range(1, d.weight_n_max + 1) if _weight_total(n) != 1),
    )
    yield _check(
        f"tail saturation g_n(x) = 1 for x >= (n+1)/2 (n <= {d.tail_n_max})",
        (n for n in range(2, d.tail_n_max + 1) if not analysis.tail_saturation_check(n)),
    )

    def central_failures() -> Iterator[str]:
        for t in range(1, d.t_max + 1):
            c = analysis.central_conditionals(t)
            if c.odd_center != analysis.conditional_saving(2 * t + 1, t):
                yield f"odd t={t}"
            if c.even_center != analysis.conditional_saving(2 * t, t):
                yield f"even t={t}"
            if c.even_left != analysis.conditional_saving(2 * t, t - 1):
                yield f"left t={t}"
            ratio = Fraction(cb.central_D(t), cb.central_C(t))
            if c.even_left + c.even_center != 1 + ratio:
                yield f"pair t={t}"

    yield _check(f"central conditionals match closed forms (t <= {d.t_max})", central_failures())
    yield _check(
        "sum_u P(u) K(u) == 3n/2 + 1/2 (n <= 8)",
        (n for n in range(1, 9)
         if sum(block_probability(u) * information_cost(u) for u in admissible_strings(n))
         != analysis.entropy(n)),
    )
    if d.asymptotic:
        c = Fraction(443, 10000)
        yield _check(
            "gap * sqrt(n) >= 0.0443 for odd n in [101, 2001]",
            (n for n in range(101, 2002, 2) if not analysis.gap_at_least(n, c)),
        )


SUITE_CHECKS = {
    "identities": identity_checks,
    "codec": codec_checks,
    "analysis": analysis_checks,
}


def run(suite: str, depth: str = "default") -> Iterator[Check]:
    d = DEPTHS[depth]
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        yield from SUITE_CHECKS[name](d)
