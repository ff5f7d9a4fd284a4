"""Inverting the sweep map: the weak and strong rank-finding algorithms.

Both algorithms drive a path diagram to balance by lifting arrows at the
lowest row whose count is positive.  The weak algorithm lifts one arrow per
step (the rightmost one starting at that row); the strong algorithm lifts
the unique arrow starting there and then re-tightens the rank sequence to
its strict cover, which cascades further unit lifts.  The balanced sequence,
shifted to start at 0, is the increasing rearrangement of the pre-image's
ranks; a single traversal of the balanced diagram then reads the pre-image
off column by column.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from typing import NamedTuple

from .core import (
    SOUTH,
    CoprimePair,
    InvalidInputError,
    InvariantViolation,
    distance,
    is_dyck,
    step_ranks,
    sweep,
)
from .diagram import PathDiagram, build_diagram

TRACE_LEVELS = ("none", "rows", "full")

WEAK = "weak"
STRONG = "strong"


@dataclass(frozen=True)
class StepRecord:
    """One algorithm step: the row worked on and the columns lifted."""

    step: int
    worked_row: int
    lifted_columns: tuple[int, ...]
    ranks_after: tuple[int, ...] | None = None

    def to_json_dict(self) -> dict:
        record = {
            "step": self.step,
            "worked_row": self.worked_row,
            "lifted_columns": list(self.lifted_columns),
        }
        if self.ranks_after is not None:
            record["ranks_after"] = list(self.ranks_after)
        return record


@dataclass(frozen=True)
class InversionTrace:
    """Ordered record of one inversion run.

    ``steps`` is empty at trace level "none" and carries rank snapshots only
    at level "full".  ``preimage`` is filled once the balanced diagram has
    been rebuilt (see invert_with_trace); the serialized footer carries it
    either way.
    """

    algorithm: str
    word: str
    pair: CoprimePair
    start_ranks: tuple[int, ...]
    steps: tuple[StepRecord, ...]
    final_ranks: tuple[int, ...]
    normalized_ranks: tuple[int, ...]
    step_count: int
    preimage: str | None = None

    @property
    def initial_ranks(self) -> tuple[int, ...]:
        return self.start_ranks

    def to_json_dict(self) -> dict:
        return {
            "header": {
                "m": self.pair.m,
                "n": self.pair.n,
                "word": self.word,
                "algorithm": self.algorithm,
                "start_ranks": list(self.start_ranks),
            },
            "steps": [record.to_json_dict() for record in self.steps],
            "footer": {
                "final_ranks": list(self.final_ranks),
                "normalized_ranks": list(self.normalized_ranks),
                "preimage": self.preimage,
                "step_count": self.step_count,
            },
        }


class InversionResult(NamedTuple):
    balanced: tuple[int, ...]
    normalized: tuple[int, ...]
    steps: int
    trace: InversionTrace


def canonical_start(word: str, pair: CoprimePair) -> tuple[int, ...]:
    """The canonical initial rank sequence for a Dyck word.

    Zeros across the leading run of S's, the blue-arrow length n everywhere
    else.  The filler n keeps every blue arrow on the grid and never
    overshoots the target sequence.
    """
    if not is_dyck(word, pair):
        raise InvalidInputError(f"canonical start needs a Dyck word, got {word!r}")
    if word[0] != SOUTH:
        raise InvalidInputError(f"word must start with S, got {word!r}")
    run = len(word) - len(word.lstrip(SOUTH))
    return tuple(0 if i < run else pair.n for i in range(pair.length))


def strict_cover(ranks) -> tuple[int, ...]:
    """The minimal strictly increasing sequence componentwise >= ranks:
    r'_1 = r_1 and r'_i = max(r_i, r'_{i-1} + 1)."""
    ranks = tuple(ranks)
    if not ranks:
        raise InvalidInputError("empty rank sequence")
    if any(b < a for a, b in zip(ranks, ranks[1:])):
        raise InvalidInputError(f"strict cover needs a weakly increasing sequence, got {ranks}")
    covered = [ranks[0]]
    for r in ranks[1:]:
        covered.append(max(r, covered[-1] + 1))
    return tuple(covered)


class _NonnegWatcher:
    """Checks that a row count never turns negative after having been >= 0.

    Holds for the weak algorithm, which only ever decrements a positive
    count; the strong algorithm's cascades routinely push zero counts
    negative, so it runs unwatched.
    """

    def __init__(self, diagram: PathDiagram):
        self._diagram = diagram
        self._reached = [r >= b for r, b in zip(diagram.red_counts, diagram.blue_counts)]

    def observe(self, rows) -> None:
        for j in rows:
            count = self._diagram.red_counts[j] - self._diagram.blue_counts[j]
            if count >= 0:
                self._reached[j] = True
            elif self._reached[j]:
                raise InvariantViolation(
                    f"row {j} count turned negative after having reached >= 0"
                )


def _check_trace_level(trace_level: str) -> None:
    if trace_level not in TRACE_LEVELS:
        raise InvalidInputError(f"trace level must be one of {TRACE_LEVELS}, got {trace_level!r}")


def _check_start(word: str, start, pair: CoprimePair, strict: bool) -> tuple[int, ...]:
    start = tuple(start)
    kind = "strictly" if strict else "weakly"
    if len(start) != pair.length:
        raise InvalidInputError(f"start needs {pair.length} ranks, got {len(start)}")
    if any(r < 0 for r in start):
        raise InvalidInputError(f"start ranks must be nonnegative, got {start}")
    if strict and any(b <= a for a, b in zip(start, start[1:])):
        raise InvalidInputError(f"start ranks must be strictly increasing, got {start}")
    if not strict and any(b < a for a, b in zip(start, start[1:])):
        raise InvalidInputError(f"start ranks must be weakly increasing, got {start}")
    for column, (letter, rank) in enumerate(zip(word, start), start=1):
        if letter != SOUTH and rank < pair.n:
            raise InvalidInputError(
                f"{kind} increasing start puts blue column {column} at {rank} < n = {pair.n}"
            )
    return start


def _finish(
    algorithm: str,
    word: str,
    pair: CoprimePair,
    start: tuple[int, ...],
    diagram: PathDiagram,
    records: list[StepRecord],
    step_count: int,
) -> InversionResult:
    balanced = diagram.ranks
    if any(b <= a for a, b in zip(balanced, balanced[1:])):
        raise InvariantViolation(f"balanced ranks {balanced} are not strictly increasing")
    normalized = tuple(r - balanced[0] for r in balanced)
    trace = InversionTrace(
        algorithm=algorithm,
        word=word,
        pair=pair,
        start_ranks=start,
        steps=tuple(records),
        final_ranks=balanced,
        normalized_ranks=normalized,
        step_count=step_count,
    )
    return InversionResult(balanced, normalized, step_count, trace)


def weak_find_rank(
    word: str,
    start,
    pair: CoprimePair,
    trace_level: str = "none",
) -> InversionResult:
    """Run the one-lift-per-step algorithm from a weakly increasing start.

    Repeatedly lifts the rightmost arrow starting at the lowest row with
    positive count until the diagram is balanced.  Returns the balanced
    (strictly increasing) sequence, its shift-to-zero normalization, the
    number of lifts (= distance from start to balanced), and the trace.
    """
    _check_trace_level(trace_level)
    if not is_dyck(word, pair):
        raise InvalidInputError(f"weak_find_rank needs a Dyck word, got {word!r}")
    start = _check_start(word, start, pair, strict=False)
    diagram = build_diagram(word, start, pair)
    watcher = _NonnegWatcher(diagram)
    cap = pair.length * diagram.height
    records: list[StepRecord] = []
    lifts = 0
    while (row := diagram.lowest_positive_row()) is not None:
        if lifts >= cap:
            raise InvariantViolation(f"exceeded the {cap}-lift termination cap; algorithm bug")
        block = diagram.columns_starting_at(row)
        if not block:
            raise InvariantViolation(f"worked row {row} has no arrow starting there")
        column = block[-1]
        changed = diagram.lift_arrow(column)
        watcher.observe(changed)
        lifts += 1
        if trace_level != "none":
            records.append(
                StepRecord(
                    step=lifts,
                    worked_row=row,
                    lifted_columns=(column,),
                    ranks_after=diagram.ranks if trace_level == "full" else None,
                )
            )
    result = _finish(WEAK, word, pair, start, diagram, records, lifts)
    if result.steps != distance(start, result.balanced):
        raise InvariantViolation("lift count differs from the rank distance travelled")
    return result


def strong_find_rank(
    word: str,
    pair: CoprimePair,
    start=None,
    trace_level: str = "none",
) -> InversionResult:
    """Run the lift-and-re-cover algorithm from a strictly increasing start.

    The default start is strict_cover(canonical_start(word, pair)), for
    which every intermediate sequence stays componentwise below the target.
    Each step lifts the unique arrow at the lowest positive row, then lifts
    successive columns while their ranks collide with the predecessor's --
    exactly re-covering the sequence with per-lift count updates.
    """
    _check_trace_level(trace_level)
    if not is_dyck(word, pair):
        raise InvalidInputError(f"strong_find_rank needs a Dyck word, got {word!r}")
    if start is None:
        start = strict_cover(canonical_start(word, pair))
    start = _check_start(word, start, pair, strict=True)
    diagram = build_diagram(word, start, pair)
    cap = pair.length * diagram.height
    records: list[StepRecord] = []
    lifts = 0
    steps = 0
    while (row := diagram.lowest_positive_row()) is not None:
        if lifts >= cap:
            raise InvariantViolation(f"exceeded the {cap}-lift termination cap; algorithm bug")
        block = diagram.columns_starting_at(row)
        if len(block) != 1:
            raise InvariantViolation(
                f"{len(block)} arrows start at worked row {row}; strict increase broken"
            )
        column = block[0]
        lifted = [column]
        diagram.lift_arrow(column)
        lifts += 1
        nxt = column + 1
        while nxt <= pair.length and diagram.start_rank(nxt) == diagram.start_rank(nxt - 1):
            if lifts >= cap:
                raise InvariantViolation(f"exceeded the {cap}-lift termination cap; algorithm bug")
            diagram.lift_arrow(nxt)
            lifts += 1
            lifted.append(nxt)
            nxt += 1
        steps += 1
        if trace_level != "none":
            records.append(
                StepRecord(
                    step=steps,
                    worked_row=row,
                    lifted_columns=tuple(lifted),
                    ranks_after=diagram.ranks if trace_level == "full" else None,
                )
            )
    return _finish(STRONG, word, pair, start, diagram, records, steps)


def rebuild_preimage(word: str, ranks, pair: CoprimePair) -> tuple[str, tuple[int, ...]]:
    """Read the pre-image off a balanced diagram.

    Starting at level 0, repeatedly follow the leftmost unused arrow that
    starts at the current level (red: level += m, blue: level -= n) until
    all m+n arrows are used.  The colors in traversal order spell the
    pre-image; the returned visit order lists the 1-based columns taken.
    """
    ranks = tuple(ranks)
    if ranks and ranks[0] != 0:
        raise InvalidInputError(f"rebuild needs ranks starting at 0, got {ranks}")
    diagram = build_diagram(word, ranks, pair)
    if not diagram.is_balanced():
        raise InvalidInputError(f"diagram of {word!r} with ranks {ranks} is not balanced")
    queues: dict[int, deque[int]] = {}
    for column, rank in enumerate(ranks, start=1):
        queues.setdefault(rank, deque()).append(column)
    level = 0
    visit: list[int] = []
    letters: list[str] = []
    for _ in range(pair.length):
        queue = queues.get(level)
        if not queue:
            raise InvalidInputError(f"no unused arrow starts at level {level}; ranks inconsistent")
        column = queue.popleft()
        visit.append(column)
        letter = word[column - 1]
        letters.append(letter)
        level += pair.m if letter == SOUTH else -pair.n
    if level != 0:
        raise InvalidInputError(f"traversal ended at level {level}, not 0; ranks inconsistent")
    preimage = "".join(letters)
    if sweep(preimage, pair) != word:
        raise InvariantViolation(f"rebuilt pre-image {preimage!r} does not sweep back to {word!r}")
    if sorted(step_ranks(preimage, pair)) != sorted(ranks):
        raise InvariantViolation(f"pre-image ranks are not a rearrangement of {ranks}")
    return preimage, tuple(visit)


def _run(word: str, pair: CoprimePair, algorithm: str, start, trace_level: str) -> InversionResult:
    if algorithm == WEAK:
        if start is None:
            start = canonical_start(word, pair)
        return weak_find_rank(word, start, pair, trace_level=trace_level)
    if algorithm == STRONG:
        return strong_find_rank(word, pair, start=start, trace_level=trace_level)
    raise InvalidInputError(f"algorithm must be 'weak' or 'strong', got {algorithm!r}")


def invert(word: str, pair: CoprimePair, algorithm: str = STRONG) -> str:
    """The unique sweep pre-image of a Dyck word."""
    preimage, _, _ = invert_with_trace(word, pair, algorithm, trace_level="none")
    return preimage


def invert_with_trace(
    word: str,
    pair: CoprimePair,
    algorithm: str = STRONG,
    start=None,
    trace_level: str = "rows",
) -> tuple[str, tuple[int, ...], InversionTrace]:
    """Invert and keep the run's trace; returns (preimage, visit_order, trace).

    The returned trace carries the rebuilt pre-image in its footer.
    """
    result = _run(word, pair, algorithm, start, trace_level)
    preimage, visit = rebuild_preimage(word, result.normalized, pair)
    return preimage, visit, replace(result.trace, preimage=preimage)
