"""Rational Dyck words, vertex ranks, the sweep map, and the area statistic.

A word over {S, W} with n letters S and m letters W encodes a lattice path in
the m x n rectangle: S marks the South end of a North step, W the West end of
an East step.  Starting-vertex ranks begin at 0 and change by +m after a
North step and by -n after an East step.  A word is (m,n)-Dyck when every
starting rank is nonnegative, and the sweep map rearranges the steps of a
Dyck path by increasing starting rank.  Coprimality of (m, n) makes all
starting ranks distinct, which is what keeps the sweep order unambiguous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

SOUTH = "S"
WEST = "W"

_NE_TO_SW = str.maketrans("NE", "SW")
_SW_TO_NE = str.maketrans("SW", "NE")


class InvalidInputError(ValueError):
    """Caller-supplied data violates a documented precondition."""


class InvariantViolation(RuntimeError):
    """An internal consistency guarantee failed; this signals a bug."""


@dataclass(frozen=True)
class CoprimePair:
    """A coprime pair (m, n).

    m is the rank increment per North step (and the red-arrow length), n the
    rank decrement per East step (and the blue-arrow length).  Words for this
    pair carry n letters S and m letters W.
    """

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise InvalidInputError(f"(m, n) must be positive, got ({self.m}, {self.n})")
        if math.gcd(self.m, self.n) != 1:
            raise InvalidInputError(f"({self.m}, {self.n}) is not a coprime pair")

    @property
    def length(self) -> int:
        """Number of letters (= steps = arrows): m + n."""
        return self.m + self.n


def parse_word(text: str) -> str:
    """Normalize a word to the internal {S, W} alphabet.

    {N, E} is accepted as an alias alphabet (N -> S, E -> W); mixing the two
    alphabets, or any other character, is rejected.
    """
    word = text.strip().upper()
    if not word:
        raise InvalidInputError("empty word")
    letters = set(word)
    if letters <= {SOUTH, WEST}:
        return word
    if letters <= {"N", "E"}:
        return word.translate(_NE_TO_SW)
    raise InvalidInputError(f"word must be over SW or NE (not mixed), got {text!r}")


def format_word(word: str, alphabet: str = "sw") -> str:
    """Render an internal {S, W} word in the requested output alphabet."""
    if alphabet == "sw":
        return word
    if alphabet == "ne":
        return word.translate(_SW_TO_NE)
    raise InvalidInputError(f"unknown alphabet {alphabet!r} (expected 'sw' or 'ne')")


def parse_ranks(text: str) -> tuple[int, ...]:
    """Parse a comma-separated rank sequence such as ``0,1,2,5``."""
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InvalidInputError(f"ranks must be comma-separated integers, got {text!r}") from None


def format_ranks(ranks: tuple[int, ...]) -> str:
    return ",".join(str(r) for r in ranks)


def check_word(word: str, pair: CoprimePair) -> None:
    """Validate letter content: exactly pair.n S's and pair.m W's."""
    souths = word.count(SOUTH)
    wests = word.count(WEST)
    if souths + wests != len(word):
        raise InvalidInputError(f"word contains letters outside {{S, W}}: {word!r}")
    if souths != pair.n or wests != pair.m:
        raise InvalidInputError(
            f"word needs {pair.n} S's and {pair.m} W's for ({pair.m},{pair.n}), "
            f"got {souths} S's and {wests} W's"
        )


def step_ranks(word: str, pair: CoprimePair) -> tuple[int, ...]:
    """Ranks of the m+n starting vertices: 0, then +m per S and -n per W.

    Defined for any word with the right letter counts; entries may be
    negative when the word is not Dyck.
    """
    check_word(word, pair)
    ranks = []
    rank = 0
    for letter in word:
        ranks.append(rank)
        rank += pair.m if letter == SOUTH else -pair.n
    return tuple(ranks)


def is_dyck(word: str, pair: CoprimePair) -> bool:
    """True iff every starting rank is nonnegative."""
    return all(r >= 0 for r in step_ranks(word, pair))


def sweep(word: str, pair: CoprimePair) -> str:
    """The sweep image: the letters of ``word`` reordered by increasing
    starting rank of their steps.

    Requires a Dyck word.  The image is again Dyck; both the distinctness of
    the ranks and the Dyck property of the output are asserted.
    """
    ranks = step_ranks(word, pair)
    if any(r < 0 for r in ranks):
        raise InvalidInputError(f"sweep needs a ({pair.m},{pair.n})-Dyck word, got {word!r}")
    if len(set(ranks)) != len(ranks):
        raise InvariantViolation(f"duplicate starting ranks for {word!r}; coprimality bug")
    image = "".join(letter for _, letter in sorted(zip(ranks, word)))
    if not is_dyck(image, pair):
        raise InvariantViolation(f"sweep image {image!r} of {word!r} is not Dyck")
    return image


def area(word: str, pair: CoprimePair) -> int:
    """Lattice cells between the path and the diagonal.

    Computed as (sum of ranks - C(m+n, 2)) / (m+n); the division is exact
    because the ranks of a Dyck word are m+n distinct nonnegative integers.
    """
    ranks = step_ranks(word, pair)
    if any(r < 0 for r in ranks):
        raise InvalidInputError(f"area needs a ({pair.m},{pair.n})-Dyck word, got {word!r}")
    excess = sum(ranks) - math.comb(pair.length, 2)
    cells, remainder = divmod(excess, pair.length)
    if remainder:
        raise InvariantViolation(f"rank sum {sum(ranks)} of {word!r} is not congruent to C({pair.length},2)")
    return cells


def distance(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Sum of componentwise differences b_i - a_i."""
    if len(a) != len(b):
        raise InvalidInputError(f"rank sequences differ in length: {len(a)} vs {len(b)}")
    return sum(b) - sum(a)
