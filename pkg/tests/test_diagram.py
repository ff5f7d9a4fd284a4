from __future__ import annotations

import random

import pytest

from ratsweep.core import CoprimePair, InvalidInputError, InvariantViolation
from ratsweep.diagram import Arrow, DiagramParams, build_diagram, default_height
from conftest import random_valid_diagram

P75 = CoprimePair(7, 5)
RUNNING_WORD = "SSSWWWWSSWWW"
RUNNING_RANKS = (0, 1, 2, 5, 6, 7, 8, 9, 10, 11, 12, 13)


def brute_counts(diagram):
    """Independent per-row tally straight from the arrow definition."""
    counts = [0] * diagram.height
    m, n = diagram.pair.m, diagram.pair.n
    for arrow in diagram.arrows():
        if arrow.color == "red":
            rows = range(arrow.start_rank, arrow.start_rank + m)
            sign = 1
        else:
            rows = range(arrow.start_rank - n, arrow.start_rank)
            sign = -1
        for j in rows:
            counts[j] += sign
    return counts


class TestBuild:
    def test_running_example_counts(self):
        diagram = build_diagram(RUNNING_WORD, RUNNING_RANKS, P75)
        expected = [0, 0, 0, -1, -1, 0, 0, -1, -2, -2, -1, 0, 1, 2, 2, 2, 1]
        assert diagram.row_counts()[:17] == expected
        assert all(c == 0 for c in diagram.row_counts()[17:])
        assert sum(diagram.row_counts()) == 0
        assert diagram.row_counts() == brute_counts(diagram)

    def test_single_up_down_is_balanced(self):
        diagram = build_diagram("SW", (0, 1), CoprimePair(1, 1))
        assert diagram.row_count(0) == 0
        assert diagram.is_balanced()

    def test_image_word_with_preimage_ranks_is_balanced(self):
        # sorted ranks of SWSWW paired with its sweep image SSWWW
        diagram = build_diagram("SSWWW", (0, 1, 2, 3, 4), CoprimePair(3, 2))
        assert diagram.is_balanced()

    def test_default_height(self):
        params = DiagramParams.for_start(RUNNING_RANKS, P75)
        assert params.U == 13 + 7 + 1
        assert params.N == params.U + 2 * 35
        assert default_height(RUNNING_RANKS, P75) == params.N
        assert build_diagram(RUNNING_WORD, RUNNING_RANKS, P75).height == params.N

    def test_arrow_records(self):
        diagram = build_diagram("SSWWW", (0, 1, 2, 3, 4), CoprimePair(3, 2))
        assert diagram.arrows()[:3] == [
            Arrow(column=1, color="red", start_rank=0),
            Arrow(column=2, color="red", start_rank=1),
            Arrow(column=3, color="blue", start_rank=2),
        ]

    @pytest.mark.parametrize(
        "ranks,message",
        [
            ((0, 1, 2, 3), "expected 5 ranks"),
            ((0, 2, 1, 3, 4), "weakly increasing"),
            ((-1, 0, 2, 3, 4), "nonnegative"),
            ((0, 1, 1, 3, 4), "starts at 1 < n"),
        ],
    )
    def test_rejects_bad_ranks(self, ranks, message):
        with pytest.raises(InvalidInputError, match=message):
            build_diagram("SSWWW", ranks, CoprimePair(3, 2))

    def test_rejects_segment_above_grid(self):
        with pytest.raises(InvalidInputError, match="tops out"):
            build_diagram("SSWWW", (0, 1, 2, 3, 4), CoprimePair(3, 2), height=3)


class TestRowCount:
    def test_out_of_range(self):
        diagram = build_diagram("SW", (0, 1), CoprimePair(1, 1))
        with pytest.raises(InvalidInputError):
            diagram.row_count(-1)
        with pytest.raises(InvalidInputError):
            diagram.row_count(diagram.height)

    def test_running_example_spot_values(self):
        diagram = build_diagram(RUNNING_WORD, RUNNING_RANKS, P75)
        # three red and three blue segments cross row 2
        assert diagram.row_count(2) == 0
        assert diagram.row_count(12) == 1
        assert diagram.row_count(diagram.top_occupied_row() + 1) == 0


class TestLowestPositiveRow:
    def test_balanced_has_none(self):
        diagram = build_diagram("SW", (0, 1), CoprimePair(1, 1))
        assert diagram.lowest_positive_row() is None

    def test_running_example(self):
        diagram = build_diagram(RUNNING_WORD, RUNNING_RANKS, P75)
        assert diagram.lowest_positive_row() == 12

    def test_cursor_follows_descending_positive_row(self):
        # (3,2) word SWSWW from its canonical start: lifting blue arrows
        # eventually raises a count below the previously lowest positive row
        pair = CoprimePair(3, 2)
        diagram = build_diagram("SWSWW", (0, 2, 2, 2, 2), pair)
        seen = []
        for column in (5, 4, 5, 5):
            diagram.lift_arrow(column)
            seen.append(diagram.lowest_positive_row())
        assert seen == [2, 3, 4, 2]
        fresh = build_diagram("SWSWW", diagram.ranks, pair)
        assert fresh.lowest_positive_row() == 2


class TestLiftArrow:
    def test_red_lift_moves_bottom_count_up(self):
        diagram = build_diagram(RUNNING_WORD, RUNNING_RANKS, P75)
        before0, before7 = diagram.row_count(0), diagram.row_count(7)
        dropped, raised = diagram.lift_arrow(1)
        assert (dropped, raised) == (0, 7)
        assert diagram.row_count(0) == before0 - 1
        assert diagram.row_count(7) == before7 + 1
        assert diagram.start_rank(1) == 1

    def test_blue_lift_vacates_bottom_row(self):
        # blue arrow at level 5 with n = 5 covers rows 0..4; lifting it
        # vacates row 0 (count rises) and covers row 5 (count drops)
        diagram = build_diagram(RUNNING_WORD, RUNNING_RANKS, P75)
        before0, before5 = diagram.row_count(0), diagram.row_count(5)
        dropped, raised = diagram.lift_arrow(4)
        assert (dropped, raised) == (5, 0)
        assert diagram.row_count(0) == before0 + 1
        assert diagram.row_count(5) == before5 - 1

    def test_column_out_of_range(self):
        diagram = build_diagram("SW", (0, 1), CoprimePair(1, 1))
        with pytest.raises(InvalidInputError):
            diagram.lift_arrow(0)
        with pytest.raises(InvalidInputError):
            diagram.lift_arrow(3)

    def test_grid_overflow_is_internal(self):
        diagram = build_diagram("SW", (0, 1), CoprimePair(1, 1), height=2)
        diagram.lift_arrow(1)
        with pytest.raises(InvariantViolation, match="grid height"):
            diagram.lift_arrow(1)

    def test_lift_then_recount_matches_cache(self, rng):
        for _ in range(60):
            diagram = random_valid_diagram(rng)
            columns = [rng.randrange(1, diagram.pair.length + 1) for _ in range(10)]
            for column in columns:
                try:
                    diagram.lift_arrow(column)
                except InvariantViolation:
                    pass  # overflow on a tiny grid; counts must still agree
            red, blue = diagram.recount()
            assert diagram.red_counts == red
            assert diagram.blue_counts == blue
            assert diagram.row_counts() == brute_counts(diagram)


class TestInvariants:
    def test_difference_identity_fuzz(self, rng):
        for _ in range(300):
            diagram = random_valid_diagram(rng)
            counts = diagram.row_counts()
            assert sum(counts) == 0
            starts = [0] * (diagram.height + 1)
            ends = [0] * (diagram.height + 1)
            m, n = diagram.pair.m, diagram.pair.n
            for arrow in diagram.arrows():
                starts[arrow.start_rank] += 1
                end = arrow.start_rank + m if arrow.color == "red" else arrow.start_rank - n
                ends[end] += 1
            for j in range(1, diagram.height):
                assert counts[j] - counts[j - 1] == starts[j] - ends[j]

    def test_sweep_image_diagram_is_balanced(self):
        # the image word paired with the sorted pre-image ranks balances
        from ratsweep.core import step_ranks, sweep
        from ratsweep.oracle import coprime_pairs, enumerate_dyck

        for pair in coprime_pairs(8):
            for word in enumerate_dyck(pair):
                image = sweep(word, pair)
                ranks = tuple(sorted(step_ranks(word, pair)))
                assert build_diagram(image, ranks, pair).is_balanced()

    def test_snapshot_shape(self):
        diagram = build_diagram(RUNNING_WORD, RUNNING_RANKS, P75)
        snap = diagram.snapshot()
        assert snap["arrows"][0] == [1, "red", 0]
        assert len(snap["arrows"]) == 12
        assert [12, 1] in snap["nonzero_row_counts"]
        assert all(c != 0 for _, c in snap["nonzero_row_counts"])
