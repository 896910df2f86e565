from fractions import Fraction
from math import comb

import pytest

from shortlex import analysis as an
from shortlex import combinatorics as cb
from shortlex.codec import brute_force_codebook
from shortlex.source import admissible_strings, block_probability, cd_count

F = Fraction


@pytest.mark.parametrize("n,x,p", [(2, 1, F(1, 2)), (3, 1, F(1, 2)), (1, 0, F(1)), (3, 5, F(0))])
def test_binomial_weight(n, x, p):
    assert an.binomial_weight(n, x) == p


def test_binomial_weight_is_law_of_cd_count():
    for n in range(1, 8):
        for x in range(n):
            mass = sum(block_probability(u) for u in admissible_strings(n) if cd_count(u) == x)
            assert mass == an.binomial_weight(n, x)


@pytest.mark.parametrize("n,x,g", [(2, 0, F(1, 2)), (2, 1, F(3, 4)), (3, 0, F(0))])
def test_conditional_saving_examples(n, x, g):
    assert an.conditional_saving(n, x) == g


def test_conditional_saving_domain():
    with pytest.raises(ValueError):
        an.conditional_saving(1, 0)
    with pytest.raises(ValueError):
        an.conditional_saving(4, 4)


def test_conditional_saving_against_codebook():
    book = brute_force_codebook(14).as_dict()
    for n in range(2, 7):
        for x in range(n):
            k = n + 1 + x
            if k > 14:
                continue
            members = [u for u in admissible_strings(n) if cd_count(u) == x]
            short = sum(len(book[u]) == k - 1 for u in members)
            assert an.conditional_saving(n, x) == F(short, len(members))


@pytest.mark.parametrize("n,p", [(1, F(1, 2)), (2, F(5, 8)), (3, F(9, 16))])
def test_saving_probability_examples(n, p):
    assert an.saving_probability(n) == p


@pytest.mark.parametrize("n,e", [(1, F(3, 2)), (2, F(23, 8)), (3, F(71, 16))])
def test_expected_length_examples(n, e):
    assert an.expected_length(n) == e


def test_fast_matches_direct():
    for n in range(1, 81):
        assert an.saving_probability(n) == an.saving_probability_direct(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_expected_length_bruteforce(n):
    assert an.expected_length_bruteforce(n) == an.expected_length(n)


def test_bruteforce_range_guard():
    for n in (0, 9):
        with pytest.raises(ValueError):
            an.expected_length_bruteforce(n)


def test_entropy_is_expected_cost():
    for n in range(1, 8):
        h = sum(block_probability(u) * (len(u) + 1 + cd_count(u)) for u in admissible_strings(n))
        assert h == an.entropy(n)


@pytest.mark.parametrize("n,b", [(3, F(9, 16)), (2, F(5, 8)), (4, F(35, 64))])
def test_saving_lower_bound(n, b):
    assert an.saving_lower_bound(n) == b


def test_lower_bound_dominated():
    for n in range(2, 300):
        assert an.saving_probability(n) >= an.saving_lower_bound(n)


def test_central_conditionals_examples():
    c1 = an.central_conditionals(1)
    assert (c1.odd_center, c1.even_center, c1.even_left) == (F(5, 8), F(3, 4), F(1, 2))
    c2 = an.central_conditionals(2)
    assert c2.even_center == F(7, 8)
    assert c2.even_left == F(1, 4)


def test_central_conditionals_match_slices():
    for t in range(1, 61):
        c = an.central_conditionals(t)
        assert c.odd_center == an.conditional_saving(2 * t + 1, t)
        assert c.even_center == an.conditional_saving(2 * t, t)
        assert c.even_left == an.conditional_saving(2 * t, t - 1)
        ratio = F(cb.central_D(t), cb.central_C(t))
        assert c.even_center == 1 - ratio
        assert c.even_left + c.even_center == 1 + ratio
        assert F(1, 2) < c.odd_center < 1 and F(1, 2) < c.even_center < 1 and 0 < c.even_left < 1


@pytest.mark.parametrize("n", [2, 3, 50])
def test_tail_saturation_examples(n):
    assert an.tail_saturation_check(n)


def test_conditional_saving_bounded():
    for n in range(2, 40):
        for x in range(n):
            assert 0 <= an.conditional_saving(n, x) <= 1


def test_key_lemma_moderate_range():
    for n in range(2, 400):
        p = an.saving_probability(n)
        assert p > F(1, 2)
        assert an.expected_length(n) < an.benchmark(n)


def test_central_weight_is_q_t():
    for t in range(1, 50):
        q = F(comb(2 * t, t), 4**t)
        assert an.binomial_weight(2 * t + 1, t) == q
        assert an.binomial_weight(2 * t, t) == q


def test_gap_table_rows():
    rows = an.gap_table(3)
    assert [r.gap for r in rows] == [F(0), F(1, 8), F(1, 16)]
    for r in an.gap_table(30):
        assert r.expected_length == r.entropy - r.saving_prob
        assert r.entropy == F(3 * r.n + 1, 2)
        assert r.gap == r.saving_prob - F(1, 2)


def test_report_record_format():
    rec = an.SavingReport.for_length(2).as_record()
    assert rec == {
        "n": 2,
        "saving_prob": "5/8",
        "expected_length": "23/8",
        "benchmark": "3/1",
        "gap": "1/8",
        "gap_times_sqrt_n": "0.176776695297",
    }
    assert tuple(rec) == an.TABLE_FIELDS


def test_gap_at_least_exact():
    assert an.gap_at_least(2, F(1, 8))
    assert not an.gap_at_least(1, F(1, 1000))


def test_to_decimal():
    assert an.to_decimal(F(71, 16)) == "4.4375"
    assert an.to_decimal(F(1, 3)) == "0.333333333333"


def test_monte_carlo_deterministic_and_worker_independent():
    a = an.monte_carlo_length(5, 5000, 9)
    b = an.monte_carlo_length(5, 5000, 9)
    c = an.monte_carlo_length(5, 5000, 9, workers=2)
    assert a == b == c
    assert a.within(an.expected_length(5))


def test_monte_carlo_single_sample():
    est = an.monte_carlo_length(3, 1, 0)
    assert est.std_error == 0.0
    assert est.mean in (4.0, 5.0, 6.0)


@pytest.mark.parametrize("n,target", [(1, F(3, 2)), (2, F(23, 8))])
def test_monte_carlo_small_n(n, target):
    est = an.monte_carlo_length(n, 100_000, 31337)
    assert est.within(target)


def test_central_bound_trend():
    const = 2**0.5 / (18 * 3.141592653589793**0.5)
    vals = [an.central_bound_scaled(t) for t in (10, 100, 1000)]
    assert vals[0] > vals[1] > vals[2] > const
