"""Tests for words: predicates, generation strategies and counting."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibcube.config import Config
from fibcube.errors import InvalidParamsError, InvalidWordError, WordIndexError
from fibcube.words import (
    CubeParams,
    Family,
    Word,
    accepts,
    count_words,
    enumerate_pruned,
    enumerate_recursive,
    enumerate_words,
    flip,
    is_i_word,
    is_o_word,
    parse_word,
    unit_word,
    weight,
    zero_word,
)

from strategies import PROPERTY_SETTINGS, cube_params


class TestWord:
    def test_positions_are_one_based(self):
        w = Word("0110")
        assert [w.bit(i) for i in range(1, 5)] == [0, 1, 1, 0]
        assert w.ones() == [2, 3]
        assert len(w) == 4
        assert str(w) == "0110"

    @pytest.mark.parametrize("i", [0, 5, -1])
    def test_bit_out_of_range(self, i):
        with pytest.raises(WordIndexError, match="index out of bounds") as excinfo:
            Word("0110").bit(i)
        assert excinfo.value.index == i
        assert isinstance(excinfo.value, IndexError)

    def test_rejects_non_binary(self):
        with pytest.raises(InvalidWordError):
            Word("0120")

    def test_empty_word(self):
        w = parse_word("\n")
        assert len(w) == 0
        assert str(w) == ""
        assert w.ones() == []

    def test_helpers(self):
        assert zero_word(3) == Word("000")
        assert unit_word(4, 2) == Word("0100")
        assert weight(Word("10110")) == 3
        assert flip(Word("000"), 3) == Word("001")
        assert flip(flip(Word("101"), 1), 1) == Word("101")

    def test_unit_word_out_of_range(self):
        with pytest.raises(WordIndexError):
            unit_word(3, 4)
        with pytest.raises(WordIndexError):
            flip(Word("01"), 0)


class TestParams:
    def test_parse(self):
        assert CubeParams.parse("o:2,2,4") == CubeParams(Family.O, 2, 2, 4)
        assert CubeParams.parse("I:1,3,0").family is Family.I

    @pytest.mark.parametrize("spec", ["o:2,2", "x:1,1,1", "o2,2,4", "o:a,2,4", "o:0,1,3", "i:1,1,-1"])
    def test_parse_rejects(self, spec):
        with pytest.raises(InvalidParamsError):
            CubeParams.parse(spec)

    @pytest.mark.parametrize("family", ["O", "o", " o "])
    def test_plain_string_family(self, family):
        params = CubeParams(family, 2, 2, 2)
        assert params.family is Family.O
        assert params == CubeParams(Family.O, 2, 2, 2)
        assert params.label() == "O(2,2,2)"
        assert count_words(params) == 3

    @pytest.mark.parametrize("family", ["X", "", None, 1])
    def test_rejects_unknown_family(self, family):
        with pytest.raises(InvalidParamsError):
            CubeParams(family, 2, 2, 2)

    def test_label(self):
        assert CubeParams(Family.I, 3, 1, 6).label() == "I(3,1,6)"

    def test_invalid_pr_in_predicates(self):
        with pytest.raises(InvalidParamsError):
            is_o_word(Word("10"), 0, 1)
        with pytest.raises(InvalidParamsError):
            is_i_word(Word("10"), 1, 0)


class TestPredicates:
    @pytest.mark.parametrize(
        "bits, p, r, expected",
        [
            ("", 2, 2, True),
            ("1010", 2, 2, True),
            ("10101", 2, 2, False),  # chain of three at spacing exactly p
            ("100101", 2, 2, True),  # spacing 3 restarts the chain
            ("1100", 2, 3, False),
            ("11", 1, 1, False),
            ("11", 1, 2, True),
            ("1001", 3, 1, False),
            ("10001", 3, 1, True),
        ],
    )
    def test_o_words(self, bits, p, r, expected):
        assert is_o_word(Word(bits), p, r) is expected

    @pytest.mark.parametrize(
        "bits, p, r, expected",
        [
            ("", 1, 1, True),
            ("11001", 2, 2, True),
            ("1101", 2, 2, False),  # one zero between runs
            ("111", 3, 2, False),
            ("0110", 3, 2, True),  # leading and trailing zeros are free
            ("11", 2, 2, True),
        ],
    )
    def test_i_words(self, bits, p, r, expected):
        assert is_i_word(Word(bits), p, r) is expected

    @PROPERTY_SETTINGS
    @given(bits=st.text(alphabet="01", max_size=10), p=st.integers(1, 4), r=st.integers(1, 4))
    def test_families_agree_when_p_or_r_is_one(self, bits, p, r):
        w = Word(bits)
        assert is_o_word(w, 1, r) == is_i_word(w, 1, r)
        assert is_o_word(w, p, 1) == is_i_word(w, p, 1)


class TestEnumeration:
    def test_o224(self):
        words = [str(w) for w in enumerate_words(CubeParams(Family.O, 2, 2, 4))]
        assert words == ["0000", "0001", "0010", "0100", "0101", "1000", "1001", "1010"]

    def test_o_vs_i_differ(self):
        assert count_words(CubeParams(Family.O, 2, 2, 2)) == 3
        assert count_words(CubeParams(Family.I, 2, 2, 2)) == 4

    @pytest.mark.parametrize("n, expected", [(0, 1), (1, 2), (2, 3), (3, 5), (4, 8), (5, 13), (6, 21), (7, 34)])
    def test_fibonacci_counts(self, n, expected):
        params = CubeParams(Family.O, 1, 1, n)
        assert count_words(params) == expected
        assert len(enumerate_words(params)) == expected

    def test_hypercube_counts(self):
        assert count_words(CubeParams(Family.O, 1, 5, 5)) == 32
        assert count_words(CubeParams(Family.I, 1, 5, 5)) == 32

    @PROPERTY_SETTINGS
    @given(params=cube_params())
    def test_words_are_sorted_unique_and_valid(self, params):
        words = enumerate_words(params)
        assert words == sorted(set(words))
        assert all(len(w) == params.n and accepts(params, w) for w in words)

    @PROPERTY_SETTINGS
    @given(params=cube_params())
    def test_count_matches_enumeration(self, params):
        assert count_words(params) == len(enumerate_words(params))

    @PROPERTY_SETTINGS
    @given(params=cube_params())
    def test_pruned_matches_brute_force(self, params):
        assert list(enumerate_pruned(params)) == enumerate_words(params)

    @PROPERTY_SETTINGS
    @given(p=st.integers(1, 4), r=st.integers(1, 4), n=st.integers(0, 9))
    def test_recurrence_matches_predicate(self, p, r, n):
        assert enumerate_recursive(p, r, n) == enumerate_words(CubeParams(Family.O, p, r, n))

    def test_long_words_use_pruned_generation(self, monkeypatch):
        params = CubeParams(Family.I, 2, 2, 8)
        expected = enumerate_words(params)
        monkeypatch.setattr(Config, "BRUTE_FORCE_WORD_LENGTH", 3)
        assert enumerate_words(params) == expected

    def test_counting_beyond_enumeration(self):
        # 55, 89, ... continue past anything worth enumerating
        assert count_words(CubeParams(Family.O, 1, 1, 30)) == 2178309
        assert count_words(CubeParams(Family.I, 1, 1, 30)) == 2178309

    def test_recursive_rejects_bad_params(self):
        with pytest.raises(InvalidParamsError):
            enumerate_recursive(0, 1, 3)
        with pytest.raises(InvalidParamsError):
            enumerate_recursive(1, 1, -1)


class TestWordFamilies:
    def test_recurrence_exhaustive(self):
        mismatches = [
            (p, r, n)
            for p in range(1, 5)
            for r in range(1, 5)
            for n in range(13)
            if enumerate_recursive(p, r, n) != enumerate_words(CubeParams(Family.O, p, r, n))
        ]
        assert mismatches == []

    @PROPERTY_SETTINGS
    @given(p=st.integers(1, 4), r=st.integers(1, 4), n=st.integers(1, 9), data=st.data())
    def test_o_words_are_hereditary(self, p, r, n, data):
        words = enumerate_words(CubeParams(Family.O, p, r, n))
        w = data.draw(st.sampled_from(words))
        for i in w.ones():
            assert is_o_word(flip(w, i), p, r)

    @PROPERTY_SETTINGS
    @given(p=st.integers(1, 4), r=st.integers(1, 4), n=st.integers(1, 9), data=st.data())
    def test_zeroing_in_any_order_stays_in_family(self, p, r, n, data):
        words = enumerate_words(CubeParams(Family.O, p, r, n))
        w = data.draw(st.sampled_from(words))
        for i in data.draw(st.permutations(w.ones())):
            w = flip(w, i)
            assert is_o_word(w, p, r)
        assert w == zero_word(n)

    @PROPERTY_SETTINGS
    @given(bits=st.text(alphabet="01", max_size=12), p=st.integers(1, 4), r=st.integers(1, 4))
    def test_larger_r_keeps_words_valid(self, bits, p, r):
        w = Word(bits)
        if is_o_word(w, p, r):
            assert is_o_word(w, p, r + 1)
        if is_i_word(w, p, r):
            assert is_i_word(w, p, r + 1)

    @PROPERTY_SETTINGS
    @given(bits=st.text(alphabet="01", max_size=12), p=st.integers(2, 5), r=st.integers(1, 4))
    def test_smaller_p_keeps_words_valid(self, bits, p, r):
        w = Word(bits)
        if is_o_word(w, p, r):
            assert is_o_word(w, p - 1, r)
        if is_i_word(w, p, r):
            assert is_i_word(w, p - 1, r)

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_small_n_gives_all_words(self, r):
        for n in range(r + 1):
            assert count_words(CubeParams(Family.O, 1, r, n)) == 2 ** n

    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_star_range_counts(self, p):
        for r in range(1, 4):
            top = p + 1 if r == 1 else p
            for n in range(1, top + 1):
                assert count_words(CubeParams(Family.O, p, r, n)) == n + 1

    def test_families_coincide_up_to_ten(self):
        for k in range(1, 5):
            for n in range(11):
                assert enumerate_words(CubeParams(Family.O, 1, k, n)) == enumerate_words(CubeParams(Family.I, 1, k, n))
                assert enumerate_words(CubeParams(Family.O, k, 1, n)) == enumerate_words(CubeParams(Family.I, k, 1, n))
