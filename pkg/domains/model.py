"""
Domains and profiles, plus their JSON wire forms.

  Domain  — duplicate-free set of orders over a common 1..n, kept sorted
            lexicographically so every listing derived from it is stable.
  Profile — a sequence of voter orders (m ≥ 1); repeats allowed.

JSON schemas:
  domain   {"n": 4, "orders": [[1,2,3,4], [2,1,3,4], …]}
  profile  {"voters": [[1,2,3], [2,3,1], [3,1,2]]}

File models are validated by pydantic; the result is converted to the
immutable library types here so nothing downstream sees raw lists.
"""

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from pydantic import BaseModel, Field

from errors import InvalidDomain, MismatchedSize
from orders.core import LinearOrder, make_linear_order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Domain:
    n: int
    orders: tuple[LinearOrder, ...]
    _members: frozenset[LinearOrder] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_members", frozenset(self.orders))

    @classmethod
    def from_orders(cls, orders: Iterable[LinearOrder]) -> "Domain":
        """Validate and sort; rejects empty input, duplicates and mixed n."""
        items = list(orders)
        if not items:
            raise InvalidDomain("A domain needs at least one order.")
        sizes = {o.n for o in items}
        if len(sizes) > 1:
            raise InvalidDomain(f"Domain mixes orders over n = {sorted(sizes)}.")
        unique = sorted(set(items))
        if len(unique) != len(items):
            raise InvalidDomain(
                f"Domain lists {len(items) - len(unique)} duplicate order(s)."
            )
        return cls(items[0].n, tuple(unique))

    def __len__(self) -> int:
        return len(self.orders)

    def __iter__(self) -> Iterator[LinearOrder]:
        return iter(self.orders)

    def __contains__(self, order: object) -> bool:
        return order in self._members


@dataclass(frozen=True)
class Profile:
    voters: tuple[LinearOrder, ...]

    @classmethod
    def from_orders(cls, voters: Iterable[LinearOrder]) -> "Profile":
        items = tuple(voters)
        if not items:
            raise MismatchedSize("A profile needs at least one voter.")
        sizes = {o.n for o in items}
        if len(sizes) > 1:
            raise MismatchedSize(f"Profile mixes orders over n = {sorted(sizes)}.")
        return cls(items)

    @property
    def n(self) -> int:
        return self.voters[0].n

    @property
    def m(self) -> int:
        return len(self.voters)


# ---------------------------------------------------------------------------
# JSON file models
# ---------------------------------------------------------------------------

class DomainFile(BaseModel):
    n: int = Field(ge=1)
    orders: list[list[int]] = Field(min_length=1)


class ProfileFile(BaseModel):
    voters: list[list[int]] = Field(min_length=1)


def load_domain(text: str | bytes) -> Domain:
    """Domain from its JSON form.  Each order must be over the declared n."""
    data = DomainFile.model_validate_json(text)
    orders = [make_linear_order(values) for values in data.orders]
    wrong = [str(o) for o in orders if o.n != data.n]
    if wrong:
        raise InvalidDomain(f"Orders {wrong} are not over the declared n={data.n}.")
    domain = Domain.from_orders(orders)
    logger.debug("Loaded domain: n=%d, %d orders.", domain.n, len(domain))
    return domain


def load_profile(text: str | bytes) -> Profile:
    data = ProfileFile.model_validate_json(text)
    return Profile.from_orders(make_linear_order(values) for values in data.voters)


def dump_domain(domain: Domain) -> str:
    return DomainFile(n=domain.n, orders=[list(o.ranking) for o in domain]).model_dump_json()


def dump_profile(profile: Profile) -> str:
    return ProfileFile(voters=[list(o.ranking) for o in profile.voters]).model_dump_json()
