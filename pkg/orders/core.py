"""
Linear orders over the alternatives 1..n and the sets derived from them.

A LinearOrder is a ranking read from most to least preferred:
  LinearOrder((2, 3, 1, 4))  ==  2 ≻ 3 ≻ 1 ≻ 4  ==  "2314"

The left-right axis is always the natural order 1 < 2 < … < n.  Any other
axis is handled by relabelling before an order reaches this module.

Derived objects:
  InversionSet — pairs (i, j), i < j, where j is ranked above i.  Backed by
                 a bitset over a canonical pair index so Bruhat comparisons
                 are a single AND.
  ideals       — the n prefix sets of a ranking.

Everything here is immutable; every function is pure.
"""

import itertools
import json
import logging
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from config import ALL_ORDERS_MAX_N
from errors import MismatchedSize, NonPermutation, ResourceLimit

logger = logging.getLogger(__name__)

Pair = tuple[int, int]


@dataclass(frozen=True, order=True, slots=True)
class LinearOrder:
    """A strict ranking of alternatives, position 1 = most preferred.

    Built through make_linear_order / parse_order, which enforce the
    permutation invariant.  restrict() is the one producer of orders over a
    proper subset of 1..n; those keep their original labels.
    """

    ranking: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.ranking)

    @property
    def top(self) -> int:
        return self.ranking[0]

    def position(self, alternative: int) -> int:
        """1-based preference position of an alternative."""
        return self.ranking.index(alternative) + 1

    def prefers(self, x: int, y: int) -> bool:
        """True when x is ranked above y."""
        return self.ranking.index(x) < self.ranking.index(y)

    def __str__(self) -> str:
        return format_order(self)


@dataclass(frozen=True, slots=True)
class InversionSet:
    n: int
    pairs: frozenset[Pair]
    mask: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        mask = 0
        for i, j in self.pairs:
            if not 1 <= i < j <= self.n:
                raise MismatchedSize(f"Pair {(i, j)} is not in Ω for n={self.n}.")
            mask |= 1 << pair_index(i, j, self.n)
        object.__setattr__(self, "mask", mask)

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def __iter__(self) -> Iterator[Pair]:
        return iter(sorted(self.pairs))

    def issubset(self, other: "InversionSet") -> bool:
        if self.n != other.n:
            raise MismatchedSize(f"Inversion sets over n={self.n} and n={other.n}.")
        return self.mask & ~other.mask == 0

    def __str__(self) -> str:
        # "12,13" labels; ∅ for the identity.
        if not self.pairs:
            return "∅"
        return ",".join(f"{i}{j}" if self.n <= 9 else f"({i},{j})" for i, j in self)


@dataclass(frozen=True, slots=True)
class SinglePeakedness:
    """Result of is_single_peaked.  Truthy exactly when the order is single-peaked."""

    single_peaked: bool
    peak: int | None
    # First preference position whose ideal is not an interval, when not
    # single-peaked.
    violation: int | None = None

    def __bool__(self) -> bool:
        return self.single_peaked


# ---------------------------------------------------------------------------
# Construction and text forms
# ---------------------------------------------------------------------------

def make_linear_order(values: Iterable[int]) -> LinearOrder:
    """Validated LinearOrder from a sequence that must be a permutation of 1..n."""
    ranking = tuple(values)
    if not ranking:
        raise NonPermutation("An order needs at least one alternative.")
    if any(not isinstance(v, int) or isinstance(v, bool) for v in ranking):
        raise NonPermutation(f"Order {list(ranking)} contains non-integer entries.")
    n = len(ranking)
    if sorted(ranking) != list(range(1, n + 1)):
        dupes = sorted(v for v, count in Counter(ranking).items() if count > 1)
        if dupes:
            raise NonPermutation(f"Order {list(ranking)} repeats {dupes}.")
        raise NonPermutation(f"Order {list(ranking)} is not a permutation of 1..{n}.")
    return LinearOrder(ranking)


def parse_order(text: str) -> LinearOrder:
    """
    Parse an order from its text form.

    Accepted:
      "2314"           compact digits, n ≤ 9 only
      "2,3,1,4"        comma-separated, any n
      "[2, 3, 1, 4]"   JSON array, any n
    A run of ten or more digits is refused rather than guessed at: "1012…"
    has no unambiguous reading.
    """
    raw = text.strip()
    if not raw:
        raise NonPermutation("Empty order text.")
    try:
        if raw.startswith("["):
            values = json.loads(raw)
            if not isinstance(values, list):
                raise NonPermutation(f"Order text {text!r} is not a JSON array.")
            return make_linear_order(values)
        if "," in raw:
            return make_linear_order(int(part) for part in raw.split(","))
        if not raw.isdigit():
            raise NonPermutation(f"Order text {text!r} is neither digits nor a list.")
        if len(raw) > 9:
            raise NonPermutation(
                f"Compact order text {text!r} has {len(raw)} digits; "
                f"use the comma-separated form for n ≥ 10."
            )
        return make_linear_order(int(ch) for ch in raw)
    except NonPermutation:
        raise
    except ValueError as exc:
        # int() on a bad token, or JSONDecodeError.
        raise NonPermutation(f"Could not parse order text {text!r}: {exc}") from exc


def format_order(order: LinearOrder) -> str:
    """Compact digits when every label is a single digit, else comma-separated."""
    if all(1 <= v <= 9 for v in order.ranking):
        return "".join(str(v) for v in order.ranking)
    return ",".join(str(v) for v in order.ranking)


def identity_order(n: int) -> LinearOrder:
    """α = 12…n."""
    return LinearOrder(tuple(range(1, n + 1)))


def reversal_order(n: int) -> LinearOrder:
    """ω = n…21."""
    return LinearOrder(tuple(range(n, 0, -1)))


def all_orders(n: int, max_n: int = ALL_ORDERS_MAX_N) -> list[LinearOrder]:
    """L([n]) in lexicographic order of rankings."""
    if n < 1:
        raise NonPermutation(f"n must be positive, got {n}.")
    if n > max_n:
        raise ResourceLimit("L([n]) enumeration n", n, max_n)
    return [LinearOrder(p) for p in itertools.permutations(range(1, n + 1))]


# ---------------------------------------------------------------------------
# Inversions and ideals
# ---------------------------------------------------------------------------

def pair_index(i: int, j: int, n: int) -> int:
    """Canonical 0-based index of (i, j) in Ω, row-major over i."""
    return (i - 1) * (2 * n - i) // 2 + (j - i - 1)


def omega(n: int) -> InversionSet:
    """Ω, every pair (i, j) with i < j."""
    return InversionSet(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def inversions(order: LinearOrder) -> InversionSet:
    """Pairs (i, j), i < j, with j ranked above i."""
    r = order.ranking
    # Restricted orders keep their labels, so Ω is taken over 1..max label.
    n = max(r)
    # a precedes b and a > b, so the inverted pair is (b, a).
    pairs = frozenset((b, a) for idx, a in enumerate(r) for b in r[idx + 1:] if a > b)
    return InversionSet(n, pairs)


def inversion_number(order: LinearOrder) -> int:
    """|Inv(σ)| by direct pair scan."""
    r = order.ranking
    return sum(1 for idx, a in enumerate(r) for b in r[idx + 1:] if a > b)


def ideals(order: LinearOrder) -> list[frozenset[int]]:
    """The n prefix sets {σ(1)}, {σ(1), σ(2)}, …, ending with every alternative."""
    return [frozenset(order.ranking[:k]) for k in range(1, order.n + 1)]


# ---------------------------------------------------------------------------
# Single-peakedness
# ---------------------------------------------------------------------------

def first_non_interval_position(ranking: Sequence[int]) -> int | None:
    lo = hi = ranking[0]
    for pos, v in enumerate(ranking[1:], start=2):
        if v == hi + 1:
            hi = v
        elif v == lo - 1:
            lo = v
        else:
            return pos
    return None


def is_single_peaked(order: LinearOrder) -> SinglePeakedness:
    """
    Interval-ideal recognizer: one pass keeping [min, max] of the prefix.

    Every ideal is an interval exactly when each next alternative sits
    immediately below the current minimum or above the current maximum.
    """
    violation = first_non_interval_position(order.ranking)
    if violation is not None:
        return SinglePeakedness(False, None, violation)
    return SinglePeakedness(True, order.top)


def is_single_peaked_axis(order: LinearOrder) -> bool:
    """
    Direct axis-condition recognizer: with peak k, k2 > k1 ≥ k or
    k2 < k1 ≤ k must imply k1 ≻ k2.  Quadratic; kept as an independent
    check on is_single_peaked.
    """
    k = order.top
    pos = {v: idx for idx, v in enumerate(order.ranking)}
    for k1 in order.ranking:
        for k2 in order.ranking:
            same_side = (k2 > k1 >= k) or (k2 < k1 <= k)
            if same_side and pos[k1] > pos[k2]:
                return False
    return True


def ideals_are_intervals(order: LinearOrder) -> bool:
    """True when every ideal is a set of consecutive integers."""
    return all(max(s) - min(s) + 1 == len(s) for s in ideals(order))


# ---------------------------------------------------------------------------
# Restriction and reversal
# ---------------------------------------------------------------------------

def restrict(order: LinearOrder, subset: Iterable[int]) -> LinearOrder:
    """The induced order on subset; original labels are kept."""
    keep = set(subset)
    if not keep:
        raise MismatchedSize("Cannot restrict to an empty set of alternatives.")
    outside = sorted(keep - set(order.ranking))
    if outside:
        raise MismatchedSize(f"Alternatives {outside} are not in {order}.")
    return LinearOrder(tuple(v for v in order.ranking if v in keep))


def reverse(order: LinearOrder) -> LinearOrder:
    return LinearOrder(order.ranking[::-1])
