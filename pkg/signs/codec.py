"""
Sign representation of single-peaked orders.

A single-peaked order on the axis 1 < … < n is built from its peak by
growing an interval one alternative at a time, each step taking either the
next larger alternative (+) or the next smaller one (−).  Recording those
n−1 choices gives a bijection

    {+, −}^(n−1)  ↔  SP([n])

e.g. 34251 ↔ "+-+-", 43251 ↔ "--+-", "++-+" ↔ 23415.

Indexing convention: signs[k] (0-based) describes the alternative at
preference position k + 2, i.e. a sign index is one less than the position
of the alternative it adds.  Every position-valued API in this module speaks
preference positions 2..n.

Bruhat moves on the encoding:
  flip_first     — toggle the first sign (swaps the top two alternatives)
  swap_opposite  — exchange a neighbouring "+-" / "-+" pair
Each changes the inversion count by exactly one, and together they generate
every cover relation of the Bruhat order restricted to SP([n]).
"""

import itertools
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum

from errors import (
    EqualAdjacentSigns,
    MalformedSigns,
    NoSignToFlip,
    NotSinglePeaked,
    SignIndexError,
)
from orders.core import LinearOrder, first_non_interval_position

logger = logging.getLogger(__name__)


class Sign(str, Enum):
    PLUS = "+"
    MINUS = "-"

    def flipped(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS


class Direction(str, Enum):
    UP = "up"      # one more inversion
    DOWN = "down"  # one fewer


@dataclass(frozen=True, order=True, slots=True)
class SignSeq:
    signs: tuple[Sign, ...]

    @property
    def n(self) -> int:
        return len(self.signs) + 1

    @property
    def top(self) -> int:
        """Peak alternative: each − consumes one alternative below it."""
        return sum(1 for s in self.signs if s is Sign.MINUS) + 1

    def __str__(self) -> str:
        return "".join(s.value for s in self.signs)

    def __len__(self) -> int:
        return len(self.signs)


@dataclass(frozen=True, slots=True)
class Neighbor:
    signs: SignSeq
    direction: Direction


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------

def parse_signs(text: str, n: int | None = None) -> SignSeq:
    """
    Parse "+-+-" style text.  U+2212 (−) is read as "-" so sequences copied
    from typeset material parse too.  When n is given the length must be n−1.
    """
    raw = text.strip().replace("−", "-")
    if any(ch not in "+-" for ch in raw):
        raise MalformedSigns(f"Sign text {text!r} may contain only '+' and '-'.")
    if n is not None and len(raw) != n - 1:
        raise MalformedSigns(
            f"Sign text {text!r} has length {len(raw)}; n={n} needs {n - 1}."
        )
    return SignSeq(tuple(Sign(ch) for ch in raw))


def all_sign_sequences(n: int) -> Iterator[SignSeq]:
    """{+, −}^(n−1) in lexicographic order of the text form ('+' < '-')."""
    for combo in itertools.product((Sign.PLUS, Sign.MINUS), repeat=n - 1):
        yield SignSeq(combo)


# ---------------------------------------------------------------------------
# Encode / decode
# ---------------------------------------------------------------------------

def encode(order: LinearOrder) -> SignSeq:
    """Sign sequence of a single-peaked order; NotSinglePeaked otherwise."""
    violation = first_non_interval_position(order.ranking)
    if violation is not None:
        raise NotSinglePeaked(order, violation)
    signs: list[Sign] = []
    hi = order.top
    for v in order.ranking[1:]:
        if v == hi + 1:
            hi = v
            signs.append(Sign.PLUS)
        else:
            signs.append(Sign.MINUS)
    return SignSeq(tuple(signs))


def decode(signs: SignSeq) -> LinearOrder:
    """Grow the interval from the peak: + appends hi+1, − appends lo−1."""
    lo = hi = signs.top
    ranking = [lo]
    for s in signs.signs:
        if s is Sign.PLUS:
            hi += 1
            ranking.append(hi)
        else:
            lo -= 1
            ranking.append(lo)
    return LinearOrder(tuple(ranking))


# ---------------------------------------------------------------------------
# Positions and counts
# ---------------------------------------------------------------------------

def negative_positions(signs: SignSeq) -> frozenset[int]:
    """Preference positions (2..n) where a − step happens."""
    return frozenset(k + 2 for k, s in enumerate(signs.signs) if s is Sign.MINUS)


def positive_positions(signs: SignSeq) -> frozenset[int]:
    """Preference positions (2..n) where a + step happens."""
    return frozenset(k + 2 for k, s in enumerate(signs.signs) if s is Sign.PLUS)


def from_positive_positions(n: int, positions: Iterable[int]) -> SignSeq:
    """Inverse of positive_positions: n=5, (2)(3)(5) → "++-+"."""
    chosen = set(positions)
    stray = sorted(p for p in chosen if not 2 <= p <= n)
    if stray:
        raise MalformedSigns(f"Positions {stray} are outside 2..{n}.")
    return SignSeq(tuple(Sign.PLUS if k + 2 in chosen else Sign.MINUS for k in range(n - 1)))


def format_positions(positions: Iterable[int]) -> str:
    """The "(2)(4)" notation."""
    return "".join(f"({p})" for p in sorted(positions))


def inversion_count(signs: SignSeq) -> int:
    """
    |Inv(decode(signs))| without decoding: the − at position p̄ adds the
    smallest alternative seen so far, which sits below all p̄−1 alternatives
    already ranked, so it contributes p̄−1 inversions; a + contributes none.
    """
    return sum(p - 1 for p in negative_positions(signs))


# ---------------------------------------------------------------------------
# Bruhat moves
# ---------------------------------------------------------------------------

def flip_first(signs: SignSeq) -> SignSeq:
    """Toggle the first sign; swaps the top two alternatives."""
    if not signs.signs:
        raise NoSignToFlip("n = 1 has no sign to flip.")
    return SignSeq((signs.signs[0].flipped(),) + signs.signs[1:])


def swap_opposite(signs: SignSeq, i: int) -> SignSeq:
    """Exchange signs i and i+1 (1-based sign indices, i in 1..n−2)."""
    if not 1 <= i <= signs.n - 2:
        raise SignIndexError(
            f"Swap index {i} is outside 1..{signs.n - 2} for '{signs}'."
        )
    a, b = signs.signs[i - 1], signs.signs[i]
    if a is b:
        raise EqualAdjacentSigns(
            f"Signs {i} and {i + 1} of '{signs}' are both '{a.value}'."
        )
    s = list(signs.signs)
    s[i - 1], s[i] = b, a
    return SignSeq(tuple(s))


def neighbors(signs: SignSeq) -> list[Neighbor]:
    """
    Every flip_first / swap_opposite result, tagged by the inversion-count
    delta.  The direction comes from the delta, not the move: flip_first
    goes up from '+' and down from '-'.
    """
    if not signs.signs:
        return []
    base = inversion_count(signs)
    moved = [flip_first(signs)]
    moved.extend(
        swap_opposite(signs, i)
        for i in range(1, signs.n - 1)
        if signs.signs[i - 1] is not signs.signs[i]
    )
    result = []
    for t in moved:
        delta = inversion_count(t) - base
        if abs(delta) != 1:
            raise RuntimeError(f"Move '{signs}' → '{t}' changed the inversion count by {delta}.")
        result.append(Neighbor(t, Direction.UP if delta > 0 else Direction.DOWN))
    result.sort(key=lambda nb: (str(nb.signs), nb.direction.value))
    return result


def monotone_walk(n: int) -> list[SignSeq]:
    """
    A cover path from α ("+…+") to ω ("−…−"): swap the leftmost "-+" when
    there is one, otherwise flip the first sign.  Every step adds one
    inversion, so the walk has binom(n, 2) + 1 entries.
    """
    current = SignSeq((Sign.PLUS,) * (n - 1))
    walk = [current]
    while any(s is Sign.PLUS for s in current.signs):
        s = current.signs
        k = next(
            (k for k in range(len(s) - 1) if s[k] is Sign.MINUS and s[k + 1] is Sign.PLUS),
            None,
        )
        current = swap_opposite(current, k + 1) if k is not None else flip_first(current)
        walk.append(current)
    logger.debug("Monotone walk for n=%d: %d steps.", n, len(walk) - 1)
    return walk
