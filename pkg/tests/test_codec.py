import pytest
from hypothesis import given, settings, strategies as st

from shortlex import codec
from shortlex.combinatorics import class_size
from shortlex.source import BitSource, InadmissibleError, admissible_strings, draw_block, information_cost


@pytest.fixture(scope="module")
def book12():
    return codec.brute_force_codebook(12)


@pytest.mark.parametrize("b,j", [("0", 1), ("11", 6), ("010", 9), ("1", 2), ("00", 3)])
def test_binary_rank(b, j):
    assert codec.binary_rank(b) == j
    assert codec.binary_unrank(j) == b


def test_binary_rank_errors():
    with pytest.raises(ValueError):
        codec.binary_rank("")
    with pytest.raises(ValueError):
        codec.binary_rank("012")
    with pytest.raises(ValueError):
        codec.binary_unrank(0)


def test_binary_shortlex_order():
    words = [codec.binary_unrank(j) for j in range(1, 200)]
    assert words == sorted(words, key=lambda w: (len(w), w))
    assert len(set(words)) == len(words)


@pytest.mark.parametrize("u,j", [("A", 1), ("CA", 9), ("AAA", 17), ("AA", 5)])
def test_source_rank(u, j):
    assert codec.source_rank(u) == j
    assert codec.source_unrank(j) == u


@pytest.mark.parametrize("u,b", [("A", "0"), ("CA", "010"), ("AA", "10")])
def test_encode_examples(u, b):
    assert codec.encode(u) == b


@pytest.mark.parametrize("b,u", [("0", "A"), ("11", "AC"), ("0001", "DD")])
def test_decode_examples(b, u):
    assert codec.decode(b) == u


@pytest.mark.parametrize("u,n", [("A", 1), ("C", 2), ("BD", 3)])
def test_code_length_examples(u, n):
    assert codec.code_length(u) == n


@pytest.mark.parametrize("bad", ["", "AB", "BC", "Z"])
def test_inadmissible_rejected(bad):
    for f in (codec.encode, codec.source_rank, codec.code_length):
        with pytest.raises(InadmissibleError):
            f(bad)


def test_decode_empty_rejected():
    with pytest.raises(ValueError):
        codec.decode("")
    with pytest.raises(ValueError):
        codec.source_unrank(0)


def test_brute_force_small_books():
    assert list(codec.brute_force_codebook(2)) == [("A", "0"), ("B", "1"), ("C", "00"), ("D", "01")]
    b3 = codec.brute_force_codebook(3)
    assert len(b3) == 8
    assert b3.entries[-2:] == (("BB", "000"), ("BD", "001"))
    b4 = codec.brute_force_codebook(4)
    assert len(b4) == 20
    lengths = [len(w) for u, w in b4 if information_cost(u) == 4]
    assert lengths.count(3) == 6 and lengths.count(4) == 6


def test_brute_force_book_is_complete(book12):
    by_cost = {}
    for u, _ in book12:
        by_cost[information_cost(u)] = by_cost.get(information_cost(u), 0) + 1
    assert by_cost == {k: class_size(k) for k in range(2, 13)}


def test_encode_matches_book(book12):
    for u, w in book12:
        assert codec.encode(u) == w
        assert codec.code_length(u) == len(w)


def test_order_preserved(book12):
    ranks = [codec.source_rank(u) for u, _ in book12]
    assert ranks == list(range(1, len(book12) + 1))


def test_dichotomy(book12):
    for k in range(2, 13):
        members = [u for u, _ in book12 if information_cost(u) == k]
        lengths = [codec.code_length(u) for u in members]
        assert set(lengths) <= {k - 1, k}
        assert lengths.count(k - 1) == lengths.count(k) == class_size(k) // 2
        assert sum(codec.is_short(u) for u in members) == class_size(k) // 2


@pytest.mark.parametrize("n", range(1, 9))
def test_roundtrip_exhaustive_short(n):
    for u in admissible_strings(n):
        assert codec.decode(codec.encode(u)) == u


def test_reverse_roundtrip_exhaustive():
    for j in range(1, 2**13 - 1):
        b = codec.binary_unrank(j)
        assert codec.encode(codec.decode(b)) == b


@pytest.mark.slow
@pytest.mark.parametrize("n", [50, 200, 1000])
def test_roundtrip_sampled(n):
    bits = BitSource(2024 + n)
    for _ in range(10_000):
        u = draw_block(bits, n)
        assert codec.decode(codec.encode(u)) == u


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 3000), st.integers(0, 2**64 - 1))
def test_roundtrip_property(n, seed):
    u = draw_block(BitSource(seed), n)
    w = codec.encode(u)
    assert codec.decode(w) == u
    assert len(w) in (information_cost(u) - 1, information_cost(u))


@settings(deadline=None)
@given(st.integers(1, 2**400))
def test_unrank_rank_property(j):
    assert codec.source_rank(codec.source_unrank(j)) == j
    assert codec.binary_rank(codec.binary_unrank(j)) == j


def test_codebook_text_roundtrip(book12):
    text = codec.brute_force_codebook(5).dumps()
    assert text.splitlines()[0] == "A\t0"
    back = codec.Codebook.loads(text)
    assert back == codec.brute_force_codebook(5)


def test_long_block_roundtrip():
    u = draw_block(BitSource(11), 10_000)
    w = codec.encode(u)
    assert codec.decode(w) == u
    assert len(w) == codec.code_length(u)
