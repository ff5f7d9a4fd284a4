"""Ground truth at desk scale: exhaustive enumeration, exact counting, a
brute-force sweep inverse, and whole-set bijection verification."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    SOUTH,
    WEST,
    CoprimePair,
    InvalidInputError,
    InvariantViolation,
    area,
    is_dyck,
    step_ranks,
    sweep,
)
from .inversion import canonical_start, rebuild_preimage, strong_find_rank, weak_find_rank

DEFAULT_BOUND = 18


def rational_catalan(pair: CoprimePair) -> int:
    """C(m+n, n) / (m+n), computed exactly; counts the (m,n)-Dyck words."""
    count, remainder = divmod(math.comb(pair.length, pair.n), pair.length)
    if remainder:
        raise InvariantViolation(f"C({pair.length},{pair.n}) not divisible by {pair.length}")
    return count


def enumerate_dyck(pair: CoprimePair, bound: int = DEFAULT_BOUND) -> list[str]:
    """All (m,n)-Dyck words in lexicographic order (S < W).

    Depth-first prefix extension, pruning any prefix whose running rank goes
    negative; that rank is the starting rank of the next step, so the prune
    is exact.
    """
    if pair.length > bound:
        raise InvalidInputError(
            f"m+n = {pair.length} exceeds the enumeration bound {bound} "
            f"(about {rational_catalan(pair)} paths)"
        )
    words: list[str] = []
    letters: list[str] = []

    def extend(souths: int, wests: int, rank: int) -> None:
        if rank < 0:
            return
        if not souths and not wests:
            words.append("".join(letters))
            return
        if souths:
            letters.append(SOUTH)
            extend(souths - 1, wests, rank + pair.m)
            letters.pop()
        if wests:
            letters.append(WEST)
            extend(souths, wests - 1, rank - pair.n)
            letters.pop()

    extend(pair.n, pair.m, 0)
    return words


@lru_cache(maxsize=None)
def _sweep_table(pair: CoprimePair) -> dict[str, str]:
    """image word -> pre-image, over the full Dyck set of the pair."""
    table: dict[str, str] = {}
    for word in enumerate_dyck(pair):
        image = sweep(word, pair)
        if image in table:
            raise InvariantViolation(
                f"sweep image collision: {table[image]!r} and {word!r} both map to {image!r}"
            )
        table[image] = word
    return table


def brute_force_invert(word: str, pair: CoprimePair) -> str:
    """The unique enumerated word whose sweep image is ``word``."""
    if not is_dyck(word, pair):
        raise InvalidInputError(f"brute_force_invert needs a Dyck word, got {word!r}")
    table = _sweep_table(pair)
    try:
        return table[word]
    except KeyError:
        raise InvariantViolation(f"no pre-image for {word!r}; bijectivity broken") from None


def cell_count_area(word: str, pair: CoprimePair) -> int:
    """Geometric area oracle: unit cells below the path and above the diagonal.

    Cell (i, j) = [i, i+1] x [j, j+1] lies below the path iff j < H(i), with
    H(i) the number of S letters before the (i+1)-th W; it clears the
    diagonal iff m*j >= n*(i+1).  Coprimality keeps the diagonal off cell
    interiors, so the corner test is exact.
    """
    if not is_dyck(word, pair):
        raise InvalidInputError(f"cell_count_area needs a Dyck word, got {word!r}")
    heights = []
    height = 0
    for letter in word:
        if letter == SOUTH:
            height += 1
        else:
            heights.append(height)
    cells = 0
    for i, h in enumerate(heights):
        for j in range(h):
            if pair.m * j >= pair.n * (i + 1):
                cells += 1
    return cells


@dataclass(frozen=True)
class PathRecord:
    """Per-path inversion measurements for one sweep image ``word``."""

    word: str
    preimage: str
    area: int
    weak_steps: int
    strong_steps: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one pair's full Dyck set."""

    pair: CoprimePair
    path_count: int
    bijection_ok: bool
    max_weak_steps: int
    max_strong_steps: int
    identity_failures: tuple[str, ...]
    elapsed: float
    total_weak_steps: int
    total_strong_steps: int
    records: tuple[PathRecord, ...]

    @property
    def step_ratio(self) -> float | None:
        """Total weak lifts over total strong steps (None if no strong steps)."""
        if self.total_strong_steps == 0:
            return None
        return self.total_weak_steps / self.total_strong_steps

    def to_json_dict(self) -> dict:
        return {
            "pair": {"m": self.pair.m, "n": self.pair.n},
            "path_count": self.path_count,
            "bijection_ok": self.bijection_ok,
            "max_weak_steps": self.max_weak_steps,
            "max_strong_steps": self.max_strong_steps,
            "identity_failures": list(self.identity_failures),
            "elapsed": self.elapsed,
            "total_weak_steps": self.total_weak_steps,
            "total_strong_steps": self.total_strong_steps,
            "step_ratio": self.step_ratio,
        }


def verify_bijection(pair: CoprimePair) -> VerificationReport:
    """Check the pair's whole Dyck set: sweep permutes it, both inversion
    algorithms recover every pre-image, and the step-count and area
    identities hold exactly."""
    started = time.perf_counter()
    failures: list[str] = []
    words = enumerate_dyck(pair)
    if len(words) != rational_catalan(pair):
        failures.append(
            f"enumerated {len(words)} words, rational Catalan count is {rational_catalan(pair)}"
        )

    table: dict[str, str] = {}
    for word in words:
        image = sweep(word, pair)
        if image in table:
            failures.append(f"sweep collision: {table[image]} and {word} -> {image}")
        table[image] = word
    if set(table) != set(words):
        failures.append("sweep image set differs from the Dyck set")

    length = pair.length
    binom = math.comb(length, 2)
    records: list[PathRecord] = []
    for image in words:
        expected = table.get(image)
        try:
            canonical = canonical_start(image, pair)
            weak = weak_find_rank(image, canonical, pair)
            strong = strong_find_rank(image, pair)
            if weak.normalized != strong.normalized:
                failures.append(f"{image}: weak and strong normalized ranks differ")
            preimage, _ = rebuild_preimage(image, weak.normalized, pair)
            if preimage != expected:
                failures.append(f"{image}: rebuilt {preimage}, brute force says {expected}")
            cells = cell_count_area(preimage, pair)
            formula = area(preimage, pair)
            if cells != formula:
                failures.append(f"{preimage}: formula area {formula} != cell count {cells}")
            tilde = sum(weak.normalized)
            if tilde != length * formula + binom:
                failures.append(f"{image}: |R~| = {tilde} != {length}*area + C({length},2)")
            if weak.steps != tilde - sum(canonical):
                failures.append(f"{image}: weak steps {weak.steps} != |R~| - |canonical|")
            if strong.steps > weak.steps:
                failures.append(f"{image}: strong steps {strong.steps} > weak steps {weak.steps}")
            records.append(
                PathRecord(
                    word=image,
                    preimage=preimage,
                    area=formula,
                    weak_steps=weak.steps,
                    strong_steps=strong.steps,
                )
            )
        except (InvalidInputError, InvariantViolation) as exc:
            failures.append(f"{image}: {exc}")

    return VerificationReport(
        pair=pair,
        path_count=len(words),
        bijection_ok=not failures,
        max_weak_steps=max((r.weak_steps for r in records), default=0),
        max_strong_steps=max((r.strong_steps for r in records), default=0),
        identity_failures=tuple(failures),
        elapsed=time.perf_counter() - started,
        total_weak_steps=sum(r.weak_steps for r in records),
        total_strong_steps=sum(r.strong_steps for r in records),
        records=tuple(records),
    )


def coprime_pairs(max_sum: int) -> list[CoprimePair]:
    """All coprime (m, n) with m + n <= max_sum, ordered by (m+n, m)."""
    return [
        CoprimePair(m, s - m)
        for s in range(2, max_sum + 1)
        for m in range(1, s)
        if math.gcd(m, s - m) == 1
    ]
