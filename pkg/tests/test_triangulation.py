import pytest
from hypothesis import given, strategies as st

from a2braid.triangulation import (ColoredTriangulation, InvalidFlipError, apply_word, flip, flip_word,
                                   format_triangulation, parse_triangulation, reachable, rotate,
                                   shift_word, t0, validate)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_t0_is_valid(k):
    T = t0(k)
    assert validate(T) is None
    assert len(T.chords) == 2 * k - 3


def test_t0_k3_chords():
    assert t0(3).chords == ((2, 4, 0), (1, 4, 1), (1, 5, 2))


def test_t0_rejects_small_k():
    with pytest.raises(ValueError):
        t0(1)


@pytest.mark.parametrize("k", [2, 3])
def test_flip_is_involution(k):
    T = t0(k)
    for c in range(2 * k - 3):
        try:
            U = flip(T, c)
        except InvalidFlipError:
            continue
        assert validate(U) is None
        assert flip(U, c) == T


def test_flip_unknown_color():
    with pytest.raises((KeyError, InvalidFlipError)):
        flip(t0(2), 5)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_shift_word_rotates(k):
    assert apply_word(t0(k), shift_word(k)) == rotate(t0(k), 1)


@given(st.lists(st.integers(0, 2), max_size=8))
def test_flip_words_connect_reachable(word):
    T = t0(3)
    U = T
    for c in word:
        try:
            U = flip(U, c)
        except InvalidFlipError:
            pass
    assert U in reachable(T)
    assert apply_word(T, flip_word(T, U)) == U


def test_format_round_trip():
    for k in (2, 3, 4):
        T = t0(k)
        assert parse_triangulation(format_triangulation(T)) == T


def test_validate_reports_crossing():
    bad = ColoredTriangulation(2, ((0, 2, 0), (1, 3, 0)))
    assert validate(bad) is not None
