import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ABC, W, all_texts, texts
from piecewise import (
    INF,
    Alphabet,
    Word,
    build_l_table,
    build_r_table,
    ell_letter,
    ell_oracle,
    ell_word,
    l_vector,
    r_letter,
    r_oracle,
    r_vector,
    r_word,
    reverse,
    rho,
    side_vectors,
)
from piecewise.errors import AlphabetError
from piecewise.side import r_vector_counted

SAMPLE = "ABBACCBCCABAABC"


def test_r_table_sample_rows():
    table = build_r_table(W(SAMPLE))
    assert table.row("A") == [0, 1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 2, 3, 4, 4, 3]
    assert table.row("B") == [0, 0, 1, 2, 2, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4, 3]
    assert table.row("C") == [0, 0, 0, 0, 0, 1, 2, 2, 3, 4, 2, 2, 2, 2, 2, 3]
    assert [table.at(7, a) for a in "ABC"] == [1, 2, 2]


def test_sample_vectors():
    u = W(SAMPLE)
    assert r_vector(u).tolist() == [0, 0, 1, 1, 0, 1, 1, 2, 3, 1, 2, 2, 3, 3, 2]
    assert l_vector(u).tolist() == [3, 4, 3, 2, 4, 3, 2, 2, 1, 2, 1, 1, 0, 0, 0]


def test_letter_examples():
    ab = Alphabet(("a", "b"))
    assert r_letter(Word.from_text("aa", ab), "a") == 2
    assert r_letter(Word.from_text("aab", ab), "a") == 1
    assert r_letter(Word.from_text("", ab), "a") == 0
    assert ell_letter("b", Word.from_text("", ab)) == 0


def test_word_side_empty_is_infinite():
    assert r_word(W("AB"), W("")) == INF
    assert ell_word(W(""), W("AB")) == INF


def test_unknown_letter_rejected():
    with pytest.raises(AlphabetError):
        r_letter(W("AB"), "Z")


def test_distinct_letters_vector_zero():
    u = Word.from_text("ABCDEFG")
    assert r_vector(u).tolist() == [0] * 7
    assert l_vector(u).tolist() == [0] * 7


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_power_vectors(n):
    u = W("C" * n)
    assert r_vector(u).tolist() == list(range(n))
    assert l_vector(u).tolist() == list(range(n - 1, -1, -1))


def test_empty_word_vectors():
    e = W("")
    assert r_vector(e).size == 0 and l_vector(e).size == 0
    assert build_r_table(e).values.tolist() == [[0, 0, 0]]


def test_oracle_agreement_exhaustive():
    for text in all_texts("ABC", 6):
        u = W(text)
        for a in "ABC":
            assert r_letter(u, a) == r_oracle(u, W(a)), (text, a)
            assert ell_letter(a, u) == ell_oracle(W(a), u), (text, a)


@given(texts(max_size=8), texts(max_size=3))
def test_word_oracle_agreement(s, t):
    u, tt = W(s), W(t)
    assert r_word(u, tt) == r_oracle(u, tt)
    assert ell_word(tt, u) == ell_oracle(tt, u)


def test_r_word_two_letters():
    u, t = W("AB"), W("BA")
    assert r_word(u, t) == min(r_letter(u, "A"), r_letter(u, "B")) == r_oracle(u, t)


@given(texts(max_size=10), st.sampled_from("ABC"))
def test_absent_letter_is_zero(s, a):
    u = W(s.replace(a, ""))
    assert r_letter(u, a) == 0


@given(texts(max_size=6), st.sampled_from("ABC"), texts(max_size=6))
def test_last_occurrence_rule(prefix, a, suffix):
    suffix = suffix.replace(a, "")
    u = W(prefix + a + suffix)
    assert r_letter(u, a) == 1 + r_word(W(prefix), W(a + suffix))


@given(texts(max_size=8), texts(max_size=8), texts(min_size=1, max_size=3))
def test_monotone_in_context(s, t, x):
    u, v, tt = W(s), W(t), W(x)
    assert r_word(v, tt) <= r_word(u + v, tt)
    assert ell_word(tt, u) <= ell_word(tt, u + v)


@given(texts(max_size=8), st.sampled_from("ABC"), texts(max_size=8), st.sampled_from("ABC"))
def test_insertion_raises_by_at_most_one(s, a, t, b):
    assert r_letter(W(s + a + t), b) <= 1 + r_letter(W(s + t), b)


@given(texts(max_size=10), texts(min_size=1, max_size=3), texts(max_size=3))
def test_larger_alphabet_smaller_distance(s, t, extra):
    u = W(s)
    assert r_word(u, W(t)) >= r_word(u, W(t + extra))


@given(texts(max_size=12), st.sampled_from("ABC"))
def test_bounded_by_minimality_index(s, a):
    u = W(s)
    assert r_letter(u, a) <= rho(u)


@given(texts(max_size=10), texts(max_size=10), texts(min_size=1, max_size=3))
def test_prefix_extension_bound(s, t, x):
    u, v, tt = W(s), W(t), W(x)
    assert r_word(u + v, tt) <= rho(u) + r_word(v, tt)


@given(texts(max_size=16))
def test_tables_step_and_base(s):
    u = W(s)
    for table in (build_r_table(u).values, build_l_table(u).values[::-1]):
        assert (table[0] == 0).all()
        assert (np.diff(table.astype(int), axis=0) <= 1).all()


def naive_r_table(codes, size):
    rows = [[0] * size]
    for b in codes:
        prev = rows[-1]
        rows.append([prev[a] + 1 if a == b else min(prev[b] + 1, prev[a]) for a in range(size)])
    return rows


@given(texts(max_size=16))
def test_table_matches_recursion(s):
    u = W(s)
    assert build_r_table(u).values.tolist() == naive_r_table(u.to_tuple(), 3)


@given(texts(max_size=16))
def test_l_table_is_mirrored(s):
    u = W(s)
    mirrored = build_r_table(reverse(u)).values[::-1]
    assert (build_l_table(u).values == mirrored).all()
    n = len(u)
    for i in range(n + 1):
        for a in "ABC":
            assert build_l_table(u).at(i, a) == ell_letter(a, u.factor(i, n))


def naive_r_vector(codes):
    # r_i = 0 without an earlier occurrence, else 1 + min r over (last occurrence, i)
    out = []
    for i, a in enumerate(codes):
        prev = [j for j in range(i) if codes[j] == a]
        out.append(0 if not prev else 1 + min(out[prev[-1]:i]))
    return out


@given(texts(max_size=20))
def test_vectors_match_naive_and_diagonals(s):
    u = W(s)
    r, l = r_vector(u), l_vector(u)
    assert r.tolist() == naive_r_vector(u.to_tuple())
    assert l.tolist() == naive_r_vector(reverse(u).to_tuple())[::-1]
    rt, lt = build_r_table(u).values, build_l_table(u).values
    for i, a in enumerate(u.to_tuple()):
        assert r[i] == rt[i, a]
        assert l[i] == lt[i + 1, a]
        assert (r[i] == 0) == (a not in u.to_tuple()[:i])
    if len(u):
        assert l[-1] == 0


@given(texts(max_size=40))
def test_push_counter(s):
    u = W(s)
    _, pushes = r_vector_counted(u)
    assert pushes <= 2 * len(u)


def test_side_vectors_bundle():
    sv = side_vectors(W(SAMPLE))
    assert int((sv.r + sv.l).max()) + 1 == 5
