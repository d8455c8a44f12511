from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from twelverep.words import (contains_pattern, find_pattern, format_word, is_reduced,
                             occurrences, parse_word, reduce_word, restrict,
                             reverse_complement)

words = st.lists(st.integers(1, 6), max_size=9).map(tuple)


def test_parse_digit_run_and_spaced_forms():
    assert parse_word("3412") == (3, 4, 1, 2)
    assert parse_word("10 2 1") == (10, 2, 1)
    assert parse_word("3,1, 2") == (3, 1, 2)
    assert parse_word("  ") == ()
    assert parse_word("7") == (7,)


def test_parse_rejects_nonpositive():
    with pytest.raises(ValueError):
        parse_word("1 0 2")


@given(words)
def test_format_parse_roundtrip(w):
    assert parse_word(format_word(w)) == w


def test_reduce_and_restrict():
    assert reduce_word((7, 3, 9, 3)) == (2, 1, 3, 1)
    assert restrict((1, 5, 2, 5, 3), {5, 3}) == (5, 5, 3)
    assert is_reduced((2, 1, 2))
    assert not is_reduced((3, 1))


def test_find_pattern_first_occurrence():
    assert find_pattern((3, 1, 4, 2), (2, 1)) == (0, 1)
    assert find_pattern((1, 2, 3), (2, 1)) is None
    assert find_pattern((5, 5, 1), (1, 1)) == (0, 1)
    with pytest.raises(ValueError):
        find_pattern((1, 2), (1, 3))


@given(words, st.sampled_from([(1, 2), (2, 1), (1, 1), (1, 2, 1), (2, 1, 3), (1, 3, 2, 4)]))
def test_find_pattern_matches_brute_force(w, u):
    brute = [c for c in combinations(range(len(w)), len(u))
             if reduce_word(w[i] for i in c) == u]
    assert contains_pattern(w, u) == bool(brute)
    if brute:
        assert find_pattern(w, u) == min(brute)
    assert occurrences(w, u) == brute


@given(words)
def test_reverse_complement_is_an_involution(w):
    n = max(w, default=1)
    assert reverse_complement(reverse_complement(w, n), n) == w


def test_reverse_complement_range_check():
    with pytest.raises(ValueError):
        reverse_complement((1, 4), 3)
