import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import AB, ABC, W, texts, words
from piecewise import (
    Alphabet,
    RleWord,
    Word,
    downward_closure,
    format_rle,
    is_subword,
    letter_swap,
    parse_rle,
    reverse,
    rle_decode,
    rle_encode,
    shuffle_set,
)
from piecewise.errors import AlphabetError, CapExceeded, ParseError
from piecewise.words import common, embeds


def test_alphabet_rejects_duplicates():
    with pytest.raises(AlphabetError):
        Alphabet(("A", "A"))


def test_alphabet_inferred_sorted():
    assert Word.from_text("CAB").alphabet.symbols == ("A", "B", "C")


def test_unknown_symbol_rejected():
    with pytest.raises(AlphabetError):
        Word.from_text("ABD", ABC)


def test_non_ascii_symbols():
    u = Word.from_text("αβα")
    assert str(u) == "αβα" and len(u.alphabet) == 2


def test_empty_word():
    e = Word.from_text("", AB)
    assert len(e) == 0 and str(e) == "" and e.alph() == frozenset()


def test_codes_read_only():
    u = W("ABC")
    with pytest.raises(ValueError):
        u.codes[0] = 1


def test_factor_and_letter():
    u = W("ABBACCB")
    assert str(u.factor(1, 4)) == "BBA"
    assert u.letter(1) == "A" and u.letter(7) == "B"
    with pytest.raises(IndexError):
        u.letter(0)


def test_concat_unions_alphabets():
    u = Word.from_text("AB") + Word.from_text("C")
    assert str(u) == "ABC" and u.alphabet.symbols == ("A", "B", "C")


def test_counts_and_alph():
    u = W("ABRACADABRA", Alphabet.of("ABRACADABRA"))
    assert u.count("A") == 5 and u.alph() == frozenset("ABRCD")


def test_is_subword_examples():
    assert is_subword(W("BA"), W("ABBA"))
    assert not is_subword(W("BB"), W("ABA"))
    assert is_subword(W(""), W(""))


@given(texts(max_size=7), texts(max_size=7))
def test_is_subword_matches_closure(s, t):
    u, v = W(s), W(t)
    assert is_subword(u, v) == (u in downward_closure(v))


def test_downward_closure_sizes():
    assert len(downward_closure(W("ABBA"))) == 11
    assert downward_closure(W("ABBA"), 1) == {W(""), W("A"), W("B")}
    with pytest.raises(CapExceeded):
        downward_closure(W("ABCABCABCABC"), cap=100)


@given(words(max_size=7), st.integers(0, 8))
def test_closure_is_down_closed(u, k):
    closed = downward_closure(u, k)
    for s in closed:
        assert len(s) <= k and is_subword(s, u)
        for i in range(len(s)):
            assert s.delete(i) in closed


def test_shuffle_membership_example():
    u, v, w = (Word.from_text(s, AB) for s in ("AAABBB", "AAAABAAAA", "AAAAAAABABABAAB"))
    assert w in shuffle_set(u, v)


@given(texts("AB", max_size=5), texts("AB", max_size=5))
def test_shuffle_properties(s, t):
    u, v = W(s, AB), W(t, AB)
    sh = shuffle_set(u, v)
    assert u + v in sh and v + u in sh
    for w in sh:
        assert len(w) == len(u) + len(v)
        assert is_subword(u, w) and is_subword(v, w)


def test_shuffle_cap():
    with pytest.raises(CapExceeded):
        shuffle_set(W("A" * 9), W("B" * 9))


@given(words())
def test_reverse_involution(u):
    assert reverse(reverse(u)) == u
    assert str(reverse(u)) == str(u)[::-1]


@given(words("AB"))
def test_letter_swap(u):
    swapped = letter_swap(u)
    assert letter_swap(swapped) == u
    assert str(swapped) == str(u).translate(str.maketrans("AB", "BA"))


def test_letter_swap_needs_binary():
    with pytest.raises(AlphabetError):
        letter_swap(W("ABC"))


def test_embeds_greedy():
    assert embeds("ace", "abcde") and not embeds("aec", "abcde")


def test_common_recodes():
    u, v = common(Word.from_text("B"), Word.from_text("A"))
    assert u.alphabet == v.alphabet and str(u) == "B"


# run-length words

@pytest.mark.parametrize(
    "text,blocks",
    [
        ("A^1 B^5 A^1 B^1", (1, 5, 1, 1)),
        ("A1B5A1B1", (1, 5, 1, 1)),
        ("A^{34}B^{23}A^(18)B", (34, 23, 18, 1)),
        ("AB", (1, 1)),
        ("", ()),
    ],
)
def test_parse_rle_forms(text, blocks):
    assert parse_rle(text, "AB").blocks == blocks


@pytest.mark.parametrize("text", ["A2A3", "A1B1C1", "A0B1", "A^", "A1B1A1A1"])
def test_parse_rle_rejects(text):
    with pytest.raises(ParseError):
        parse_rle(text)


def test_parse_rle_huge_exponent():
    w = parse_rle("A^{1000000000000000000000}B")
    assert w.blocks[0] == 10**21 and w.length == 10**21 + 1


def test_format_rle_styles():
    w = parse_rle("A1B5A1", "AB")
    assert format_rle(w) == "A1B5A1"
    assert format_rle(w, "exponent") == "A^1 B^5 A^1"
    assert format_rle(RleWord(None, (), AB), "exponent") == "ε"


def test_rle_word_validation():
    with pytest.raises(ParseError):
        RleWord("A", (1, 0), AB)
    with pytest.raises(ParseError):
        RleWord("A", (), AB)
    with pytest.raises(AlphabetError):
        RleWord("A", (1, 1), ABC)


def test_cumulative():
    assert parse_rle("A2B3A1").cumulative() == [0, 2, 5, 6]


@given(texts("AB", max_size=20))
def test_rle_round_trip(s):
    u = W(s, AB)
    w = rle_encode(u)
    assert rle_decode(w) == u
    assert len(w) == len(u)
    assert all(n >= 1 for n in w.blocks)
    assert parse_rle(format_rle(w), AB) == w


@given(st.lists(st.integers(1, 5), max_size=8), st.sampled_from("AB"))
def test_rle_decode_matches_blocks(blocks, first):
    w = RleWord(first if blocks else None, tuple(blocks), AB)
    assert rle_encode(rle_decode(w)) == w


def test_rle_encode_rejects_three_letters():
    with pytest.raises(AlphabetError):
        rle_encode(W("ABC"))


def test_word_array_dtype():
    assert W("ABC").codes.dtype == np.uint8
