"""
Typed errors raised by the library.

Everything subclasses ValueError: callers that only care about "bad input"
can keep catching that, while the CLI reports the concrete class name.
"""

from typing import Any


class SignedOrderError(ValueError):
    """Base class for every input/validation error in this package."""


class NonPermutation(SignedOrderError):
    """A ranking that is not a permutation of 1..n, or unparseable order text."""


class NotSinglePeaked(SignedOrderError):
    """An order that fails the interval-ideal test.

    position is the first preference position (1-based) whose ideal is not
    an interval of consecutive alternatives.
    """

    def __init__(self, order: Any, position: int) -> None:
        self.order = order
        self.position = position
        super().__init__(
            f"Order {order} is not single-peaked: ideal at position {position} "
            f"is not an interval."
        )


class MalformedSigns(SignedOrderError):
    """Sign text outside ^[+-]*$, or a length that disagrees with n."""


class EqualAdjacentSigns(SignedOrderError):
    """swap_opposite applied to two equal neighbouring signs."""


class SignIndexError(SignedOrderError, IndexError):
    """A sign index outside the range an operation accepts."""


class NoSignToFlip(SignedOrderError):
    """flip_first on the empty sign sequence (n = 1)."""


class MismatchedSize(SignedOrderError):
    """Orders over different n combined, or a subset/triple outside 1..n."""


class InvalidDomain(SignedOrderError):
    """Empty domain, duplicate orders, or orders over different n."""


class OrderNotInDomain(SignedOrderError):
    """A path endpoint that is not a member of the digraph's domain."""


class EvenProfile(SignedOrderError):
    """Majority relation requested for an even number of voters."""


class ResourceLimit(SignedOrderError):
    """An enumeration or sweep larger than its configured limit."""

    def __init__(self, what: str, requested: int, limit: int) -> None:
        self.what = what
        self.requested = requested
        self.limit = limit
        super().__init__(f"{what}: {requested} exceeds the configured limit of {limit}.")


class DegenerateGenerators(SignedOrderError):
    """Tiling generators with a non-positive height or out-of-order slopes."""


class NotRealizable(SignedOrderError):
    """An order the tiling has no snake for (wrong n)."""
