from __future__ import annotations

import math

import pytest

from ratsweep.core import (
    CoprimePair,
    InvalidInputError,
    area,
    distance,
    format_ranks,
    format_word,
    is_dyck,
    parse_ranks,
    parse_word,
    step_ranks,
    sweep,
)
from ratsweep.oracle import cell_count_area, enumerate_dyck

from conftest import SMALL_PAIRS


class TestCoprimePair:
    def test_accepts_coprime(self):
        pair = CoprimePair(7, 5)
        assert (pair.m, pair.n, pair.length) == (7, 5, 12)

    @pytest.mark.parametrize("m,n", [(4, 2), (6, 3), (2, 2)])
    def test_rejects_non_coprime(self, m, n):
        with pytest.raises(InvalidInputError):
            CoprimePair(m, n)

    @pytest.mark.parametrize("m,n", [(0, 1), (1, 0), (-3, 2)])
    def test_rejects_non_positive(self, m, n):
        with pytest.raises(InvalidInputError):
            CoprimePair(m, n)


class TestWordParsing:
    def test_sw_passthrough(self):
        assert parse_word("SSWWW") == "SSWWW"

    def test_ne_alias(self):
        assert parse_word("NNEEE") == "SSWWW"
        assert parse_word("ne") == "SW"

    def test_lowercase_and_whitespace(self):
        assert parse_word(" sswww\n") == "SSWWW"

    @pytest.mark.parametrize("text", ["SNEW", "SE", "NW", "XYZ", ""])
    def test_rejects_mixed_or_junk(self, text):
        with pytest.raises(InvalidInputError):
            parse_word(text)

    def test_format_word(self):
        assert format_word("SSWWW") == "SSWWW"
        assert format_word("SSWWW", "ne") == "NNEEE"
        with pytest.raises(InvalidInputError):
            format_word("SW", "xy")

    def test_ranks_round_trip(self):
        assert parse_ranks("0,1, 2,5") == (0, 1, 2, 5)
        assert format_ranks((0, 1, 2)) == "0,1,2"
        with pytest.raises(InvalidInputError):
            parse_ranks("0,a,2")


class TestStepRanks:
    @pytest.mark.parametrize(
        "word,pair,expected",
        [
            ("SSWWW", CoprimePair(3, 2), (0, 3, 6, 4, 2)),
            ("SW", CoprimePair(1, 1), (0, 1)),
            (
                "SSSWWWWSSWWW",
                CoprimePair(7, 5),
                (0, 7, 14, 21, 16, 11, 6, 1, 8, 15, 10, 5),
            ),
        ],
    )
    def test_examples(self, word, pair, expected):
        assert step_ranks(word, pair) == expected

    def test_negative_entries_allowed(self):
        assert step_ranks("SWWSW", CoprimePair(3, 2)) == (0, 3, 1, -1, 2)

    def test_letter_count_mismatch(self):
        with pytest.raises(InvalidInputError):
            step_ranks("SSWW", CoprimePair(3, 2))
        with pytest.raises(InvalidInputError):
            step_ranks("SSSWW", CoprimePair(3, 2))

    def test_distinct_ranks_exhaustive_to_13(self):
        from ratsweep.oracle import coprime_pairs

        for pair in coprime_pairs(13):
            for word in enumerate_dyck(pair):
                ranks = step_ranks(word, pair)
                assert len(set(ranks)) == len(ranks)


class TestIsDyck:
    def test_examples(self):
        assert is_dyck("SSWWW", CoprimePair(3, 2))
        assert not is_dyck("SWWSW", CoprimePair(3, 2))
        assert is_dyck("SW", CoprimePair(1, 1))


class TestSweep:
    @pytest.mark.parametrize(
        "word,expected",
        [("SSWWW", "SWSWW"), ("SWSWW", "SSWWW")],
    )
    def test_examples_32(self, word, expected):
        assert sweep(word, CoprimePair(3, 2)) == expected

    def test_fixed_point(self):
        assert sweep("SW", CoprimePair(1, 1)) == "SW"

    def test_rejects_non_dyck(self):
        with pytest.raises(InvalidInputError):
            sweep("SWWSW", CoprimePair(3, 2))

    def test_preserves_letters_and_dyck_property(self):
        for pair in SMALL_PAIRS:
            for word in enumerate_dyck(pair):
                image = sweep(word, pair)
                assert sorted(image) == sorted(word)
                assert is_dyck(image, pair)


class TestArea:
    def test_examples(self):
        assert area("SSWWW", CoprimePair(3, 2)) == 1
        assert area("SWSWW", CoprimePair(3, 2)) == 0

    def test_running_example_agrees_with_cell_count(self):
        # rank sum 114, C(12,2) = 66, so (114 - 66) / 12 = 4; the geometric
        # oracle must agree on the same value.
        pair = CoprimePair(7, 5)
        word = "SSSWWWWSSWWW"
        assert sum(step_ranks(word, pair)) == 114
        assert area(word, pair) == 4
        assert cell_count_area(word, pair) == 4

    def test_rejects_non_dyck(self):
        with pytest.raises(InvalidInputError):
            area("SWWSW", CoprimePair(3, 2))

    def test_bounds_and_unique_maximum(self):
        for pair in SMALL_PAIRS:
            top = (pair.m - 1) * (pair.n - 1) // 2
            maximizers = []
            for word in enumerate_dyck(pair):
                cells = area(word, pair)
                assert 0 <= cells <= top
                if cells == top:
                    maximizers.append(word)
            assert maximizers == ["S" * pair.n + "W" * pair.m]

    def test_rank_sum_identity(self):
        # one area cell is worth exactly m+n of rank sum
        for pair in SMALL_PAIRS:
            binom = math.comb(pair.length, 2)
            for word in enumerate_dyck(pair):
                ranks = step_ranks(word, pair)
                assert sum(ranks) == pair.length * area(word, pair) + binom


class TestDistance:
    def test_examples(self):
        assert distance((0, 0, 0), (0, 1, 2)) == 3
        assert distance((0, 2, 5), (0, 2, 5)) == 0
        assert distance((0, 0, 5), (0, 1, 5)) == 1

    def test_length_mismatch(self):
        with pytest.raises(InvalidInputError):
            distance((0, 1), (0, 1, 2))
