"""Repetition detection tiers against the definitional oracle."""

from __future__ import annotations

from itertools import product

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from thuegame import words
from thuegame.words import (
    Repetition,
    canonical_form,
    find_repetition,
    find_repetition_bruteforce,
    from_letters,
    has_square,
    is_nonrepetitive,
    repetition_through,
    thue_word,
    to_letters,
    validate_alphabet,
    validate_word,
)


def test_oracle_trivial_words():
    assert find_repetition_bruteforce(()) is None
    assert find_repetition_bruteforce((0,)) is None
    assert find_repetition_bruteforce((0, 1)) is None
    assert find_repetition_bruteforce((0, 0)) == Repetition(0, 1)
    assert find_repetition_bruteforce((0, 1, 0, 1)) == Repetition(0, 2)
    assert find_repetition_bruteforce((0, 1, 0)) is None


def test_oracle_picks_earliest_ending_square():
    # 11 ends at index 3, before the size-3 square ending at 6
    assert find_repetition_bruteforce((0, 1, 1, 0, 1, 1)) == Repetition(1, 1)
    # 22 at the very front beats the longer square further right
    assert find_repetition_bruteforce((2, 2, 0, 1, 0, 1)) == Repetition(0, 1)
    assert find_repetition_bruteforce((0, 1, 0, 0)) == Repetition(2, 1)


def test_trap_word_extensions():
    # inserting any of a, b, c into the gap of acbc creates a square
    assert find_repetition_bruteforce(from_letters("aacbc")) == Repetition(0, 1)
    assert find_repetition_bruteforce(from_letters("abcbc")) == Repetition(1, 2)
    assert find_repetition_bruteforce(from_letters("accbc")) == Repetition(1, 1)
    assert find_repetition_bruteforce(from_letters("acbc")) is None


def test_find_repetition_matches_oracle_exhaustive_binary():
    for n in range(9):
        for w in product(range(2), repeat=n):
            assert find_repetition(w) == find_repetition_bruteforce(w)


def test_find_repetition_matches_oracle_exhaustive_ternary():
    for n in range(8):
        for w in product(range(3), repeat=n):
            assert find_repetition(w) == find_repetition_bruteforce(w)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=3), max_size=40))
def test_find_repetition_matches_oracle_random(w):
    assert find_repetition(tuple(w)) == find_repetition_bruteforce(tuple(w))


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=5), min_size=64, max_size=200))
def test_has_square_long_words_match_oracle(w):
    # length >= 64 exercises the vectorized existence path
    assert has_square(tuple(w)) == (find_repetition_bruteforce(tuple(w)) is not None)


def test_has_square_accepts_lists_and_ranges():
    assert has_square([0, 1, 0, 1]) is True
    assert has_square(range(70)) is False
    assert has_square(list(thue_word(100))) is False


def test_repetition_end():
    assert Repetition(3, 2).end() == 7


def test_repetition_through_after_single_insertion():
    base = thue_word(60)
    for pos in (0, 13, 30, 59, 60):
        for sym in range(3):
            w = base[:pos] + (sym,) + base[pos:]
            got = repetition_through(w, pos)
            assert (got is None) == (find_repetition_bruteforce(w) is None)
            if got is not None:
                # witness covers the insertion and really is a square
                assert got.start <= pos < got.end()
                assert w[got.start : got.start + got.size] == w[got.start + got.size : got.end()]


def test_repetition_through_position_validation():
    with pytest.raises(ValueError):
        repetition_through((0, 1), 2)
    with pytest.raises(ValueError):
        repetition_through((), 0)


def test_thue_word_square_free_with_oracle():
    w = thue_word(128)
    assert len(w) == 128
    assert set(w) <= {0, 1, 2}
    assert w[0] == 0
    assert find_repetition_bruteforce(w) is None


def test_thue_word_prefix_stability():
    assert thue_word(100) == thue_word(257)[:100]
    assert thue_word(0) == ()
    assert thue_word(1) == (0,)
    with pytest.raises(ValueError):
        thue_word(-1)


def test_thue_word_long_is_nonrepetitive():
    assert is_nonrepetitive(thue_word(2048))


def test_canonical_form_basics():
    assert canonical_form((5, 3, 5, 7)) == (0, 1, 0, 2)
    assert canonical_form(()) == ()
    assert canonical_form((2, 2, 2)) == (0, 0, 0)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=9), max_size=30))
def test_canonical_form_idempotent_and_square_preserving(w):
    w = tuple(w)
    c = canonical_form(w)
    assert canonical_form(c) == c
    assert find_repetition(c) == find_repetition(w)


def test_validate_alphabet_bounds():
    assert validate_alphabet(1) == 1
    assert validate_alphabet(64) == 64
    for bad in (0, -1, 65):
        with pytest.raises(ValueError):
            validate_alphabet(bad)


def test_validate_word():
    assert validate_word([0, 2, 1], 3) == (0, 2, 1)
    with pytest.raises(ValueError):
        validate_word([0, 3], 3)
    with pytest.raises(ValueError):
        validate_word([-1], 3)


def test_letters_round_trip():
    assert to_letters((0, 2, 1, 2)) == "acbc"
    assert from_letters("acbc") == (0, 2, 1, 2)
    assert from_letters(to_letters(thue_word(50))) == thue_word(50)
