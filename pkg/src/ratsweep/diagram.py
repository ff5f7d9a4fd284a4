"""Path diagrams: colored arrows on an (m+n) x N grid with cached row counts.

The diagram of a word and a weakly increasing rank sequence places one arrow
per column: red (up, covering the m cell rows above its start) where the word
has an S, blue (down, covering the n cell rows below its start) where it has
a W.  Row j is the strip of cells between levels j and j+1; its count c(j) is
the number of red segments minus blue segments in it.  The inversion
algorithms drive all counts to zero by lifting arrows one unit at a time,
each lift touching exactly two cached counts.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .core import SOUTH, CoprimePair, InvalidInputError, InvariantViolation, check_word

RED = "red"
BLUE = "blue"


@dataclass(frozen=True)
class Arrow:
    """One placed arrow: 1-based column, color, and starting level."""

    column: int
    color: str
    start_rank: int


@dataclass(frozen=True)
class DiagramParams:
    """Grid sizing for one algorithm run: U = max(start) + m + 1, N = U + 2mn."""

    U: int
    N: int

    @classmethod
    def for_start(cls, ranks, pair: CoprimePair) -> "DiagramParams":
        u = max(ranks) + pair.m + 1
        return cls(U=u, N=u + 2 * pair.m * pair.n)


def default_height(ranks, pair: CoprimePair) -> int:
    """The common grid height N = max(ranks) + m + 1 + 2mn."""
    return DiagramParams.for_start(ranks, pair).N


class PathDiagram:
    """Mutable arrow grid with cached per-row red/blue tallies.

    Single-writer: an algorithm owns and mutates its diagram in place via
    lift_arrow; distinct instances are safe to use in parallel.  The
    lowest_positive_row query keeps an internal cursor, so share a diagram
    read-only only when no queries race a writer.
    """

    def __init__(self, word: str, ranks, pair: CoprimePair, height: int | None = None):
        check_word(word, pair)
        ranks = tuple(ranks)
        if len(ranks) != pair.length:
            raise InvalidInputError(f"expected {pair.length} ranks, got {len(ranks)}")
        if any(r < 0 for r in ranks):
            raise InvalidInputError(f"ranks must be nonnegative, got {ranks}")
        if any(b < a for a, b in zip(ranks, ranks[1:])):
            raise InvalidInputError(f"ranks must be weakly increasing, got {ranks}")
        n_grid = default_height(ranks, pair) if height is None else height
        if n_grid < 1:
            raise InvalidInputError(f"grid height must be positive, got {n_grid}")

        self.word = word
        self.pair = pair
        self.height = n_grid
        self._ranks = list(ranks)
        self.red_counts = [0] * n_grid
        self.blue_counts = [0] * n_grid
        for column, (letter, rank) in enumerate(zip(word, ranks), start=1):
            if letter == SOUTH:
                if rank + pair.m > n_grid:
                    raise InvalidInputError(
                        f"red arrow in column {column} (start {rank}) tops out above row {n_grid - 1}"
                    )
                for j in range(rank, rank + pair.m):
                    self.red_counts[j] += 1
            else:
                if rank < pair.n:
                    raise InvalidInputError(
                        f"blue arrow in column {column} starts at {rank} < n = {pair.n}"
                    )
                if rank > n_grid:
                    raise InvalidInputError(
                        f"blue arrow in column {column} (start {rank}) tops out above row {n_grid - 1}"
                    )
                for j in range(rank - pair.n, rank):
                    self.blue_counts[j] += 1
        # Rows below the cursor are known to have count <= 0.
        self._cursor = 0

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(self._ranks)

    def start_rank(self, column: int) -> int:
        """Starting level of the arrow in the given 1-based column."""
        if not 1 <= column <= self.pair.length:
            raise InvalidInputError(f"column {column} out of range 1..{self.pair.length}")
        return self._ranks[column - 1]

    def color(self, column: int) -> str:
        return RED if self.word[column - 1] == SOUTH else BLUE

    def arrows(self) -> list[Arrow]:
        return [
            Arrow(column=i + 1, color=RED if letter == SOUTH else BLUE, start_rank=rank)
            for i, (letter, rank) in enumerate(zip(self.word, self._ranks))
        ]

    def row_count(self, j: int) -> int:
        """The cached count c(j) = red segments minus blue segments in row j."""
        if not 0 <= j < self.height:
            raise InvalidInputError(f"row {j} out of range 0..{self.height - 1}")
        return self.red_counts[j] - self.blue_counts[j]

    def row_counts(self) -> list[int]:
        return [r - b for r, b in zip(self.red_counts, self.blue_counts)]

    def is_balanced(self) -> bool:
        """True iff every row count is 0.

        Pure scan, no cursor mutation; equivalent to "no positive count"
        since the counts of any diagram total 0 (nm red segments, mn blue).
        """
        return all(r == b for r, b in zip(self.red_counts, self.blue_counts))

    def lowest_positive_row(self) -> int | None:
        """Smallest row j with c(j) > 0, or None when balanced.

        Scans upward from a cursor that only moves down when a lift raises a
        count below it, keeping total scan work linear in N plus the number
        of lifts between queries.
        """
        j = self._cursor
        red, blue = self.red_counts, self.blue_counts
        while j < self.height and red[j] <= blue[j]:
            j += 1
        self._cursor = j
        return j if j < self.height else None

    def columns_starting_at(self, level: int) -> range:
        """1-based columns whose arrows start at the given level.

        Binary search over the rank list; meaningful while the ranks are
        weakly increasing (which the algorithms maintain).
        """
        lo = bisect_left(self._ranks, level)
        hi = bisect_right(self._ranks, level)
        return range(lo + 1, hi + 1)

    def lift_arrow(self, column: int) -> tuple[int, int]:
        """Raise the arrow in the 1-based column one unit.

        Exactly two cached counts change: for a red arrow starting at a,
        c(a) drops by 1 (row a is vacated) and c(a+m) rises by 1; for a blue
        arrow starting at a, c(a) drops by 1 (the blue segment now covers
        row a) and c(a-n) rises by 1 (its bottom row is vacated).  Returns
        (dropped_row, raised_row).  Constant cost.
        """
        if not 1 <= column <= self.pair.length:
            raise InvalidInputError(f"column {column} out of range 1..{self.pair.length}")
        i = column - 1
        a = self._ranks[i]
        m, n = self.pair.m, self.pair.n
        if self.word[i] == SOUTH:
            if a + 1 + m > self.height:
                raise InvariantViolation(
                    f"lift would push red arrow in column {column} above row {self.height - 1}; "
                    "grid height N too small"
                )
            self.red_counts[a] -= 1
            self.red_counts[a + m] += 1
            dropped, raised = a, a + m
        else:
            if a + 1 > self.height:
                raise InvariantViolation(
                    f"lift would push blue arrow in column {column} above row {self.height - 1}; "
                    "grid height N too small"
                )
            self.blue_counts[a] += 1
            self.blue_counts[a - n] -= 1
            dropped, raised = a, a - n
        self._ranks[i] = a + 1
        if raised < self._cursor:
            self._cursor = raised
        return dropped, raised

    def top_occupied_row(self) -> int:
        """Highest row containing any segment."""
        m, n = self.pair.m, self.pair.n
        return max(
            rank + m - 1 if letter == SOUTH else rank - 1
            for letter, rank in zip(self.word, self._ranks)
        )

    def recount(self) -> tuple[list[int], list[int]]:
        """From-scratch red/blue tallies; test oracle for the cached ones."""
        red = [0] * self.height
        blue = [0] * self.height
        m, n = self.pair.m, self.pair.n
        for letter, rank in zip(self.word, self._ranks):
            if letter == SOUTH:
                for j in range(rank, rank + m):
                    red[j] += 1
            else:
                for j in range(rank - n, rank):
                    blue[j] += 1
        return red, blue

    def snapshot(self) -> dict:
        """Serializable state: ordered arrows plus the nonzero row counts."""
        return {
            "arrows": [[a.column, a.color, a.start_rank] for a in self.arrows()],
            "nonzero_row_counts": [
                [j, c] for j, c in enumerate(self.row_counts()) if c != 0
            ],
        }


def build_diagram(word: str, ranks, pair: CoprimePair, height: int | None = None) -> PathDiagram:
    """Construct the path diagram T(word, ranks) with all row counts tallied.

    ``height`` defaults to max(ranks) + m + 1 + 2mn, tall enough for any
    algorithm run started from these ranks.
    """
    return PathDiagram(word, ranks, pair, height)
