"""
Pairwise majority and brute-force Condorcet verification.

MajorityRelation.prefers holds (x, y) when strictly more than m/2 voters
rank x above y.  The "≺" reading used in reports is the converse: a cycle
1 ≺ 3 ≺ 2 ≺ 1 means 3 beats 1, 2 beats 3 and 1 beats 2.

Only odd m is accepted: the relation is then complete (a tournament), so
acyclic ⇔ transitive ⇔ the win counts are exactly 0, 1, …, n−1.  The
profile sweep uses that score test; has_majority_cycle runs a depth-first
cycle search on the networkx digraph, and the two are cross-checked in the
test suite.

The sweep walks the full Cartesian power D^m (profiles are ordered voter
tuples, not multisets), partitioned by first voter.  With SWEEP_WORKERS > 1
the partitions run in a process pool; the reported witness is always the
lexicographically first cyclic profile, and the profile count is that of
the serial sweep, whatever the worker count.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import networkx as nx

from config import MAX_PROFILES, SWEEP_WORKERS
from domains.model import Domain, Profile
from errors import EvenProfile, MismatchedSize, ResourceLimit
from orders.core import LinearOrder

logger = logging.getLogger(__name__)

Beat = tuple[int, int]


@dataclass(frozen=True)
class MajorityRelation:
    n: int
    prefers: frozenset[Beat]

    @classmethod
    def from_order(cls, order: LinearOrder) -> "MajorityRelation":
        """The relation a lone voter with this order induces."""
        r = order.ranking
        return cls(order.n, frozenset((a, b) for idx, a in enumerate(r) for b in r[idx + 1:]))

    def beats(self, x: int, y: int) -> bool:
        return (x, y) in self.prefers

    def is_complete(self) -> bool:
        return all(
            (x, y) in self.prefers or (y, x) in self.prefers
            for x, y in itertools.combinations(range(1, self.n + 1), 2)
        )


@dataclass(frozen=True)
class CondorcetVerdict:
    """Truthy when every profile in D^m has an acyclic majority relation."""

    condorcet: bool
    profiles_checked: int
    witness: Profile | None = None

    def __bool__(self) -> bool:
        return self.condorcet


# ---------------------------------------------------------------------------
# Majority relation and cycles
# ---------------------------------------------------------------------------

def majority_relation(profile: Profile) -> MajorityRelation:
    """
    Pairwise strict majority of an odd-sized profile.

    Raises:
        EvenProfile: m is even, where ties would leave the relation incomplete.
    """
    m = profile.m
    if m % 2 == 0:
        raise EvenProfile(f"Majority needs an odd number of voters, got m={m}.")
    n = profile.n
    positions = [{v: idx for idx, v in enumerate(o.ranking)} for o in profile.voters]
    prefers = set()
    for x, y in itertools.combinations(range(1, n + 1), 2):
        x_above = sum(1 for pos in positions if pos[x] < pos[y])
        prefers.add((x, y) if 2 * x_above > m else (y, x))
    return MajorityRelation(n, frozenset(prefers))


def _precedence_graph(relation: MajorityRelation) -> "nx.DiGraph[int]":
    """Arcs loser → winner, so a walk along arcs reads as a ≺ chain."""
    G: nx.DiGraph[int] = nx.DiGraph()
    G.add_nodes_from(range(1, relation.n + 1))
    G.add_edges_from((y, x) for x, y in sorted(relation.prefers))
    return G


def find_majority_cycle(relation: MajorityRelation) -> list[int] | None:
    """
    A majority cycle as a ≺ chain that returns to its start, e.g.
    [1, 3, 2, 1] for 1 ≺ 3 ≺ 2 ≺ 1; None when the relation is acyclic.
    """
    try:
        edges = nx.find_cycle(_precedence_graph(relation))
    except nx.NetworkXNoCycle:
        return None
    return [u for u, _ in edges] + [edges[0][0]]


def has_majority_cycle(relation: MajorityRelation) -> bool:
    return find_majority_cycle(relation) is not None


def format_cycle(cycle: list[int]) -> str:
    return " ≺ ".join(str(x) for x in cycle)


def majority_order(relation: MajorityRelation) -> LinearOrder | None:
    """The order the relation agrees with, when it is a transitive tournament."""
    if not relation.is_complete() or has_majority_cycle(relation):
        return None
    wins = {x: 0 for x in range(1, relation.n + 1)}
    for x, _ in relation.prefers:
        wins[x] += 1
    return LinearOrder(tuple(sorted(wins, key=lambda x: -wins[x])))


# ---------------------------------------------------------------------------
# Brute-force Condorcet sweep
# ---------------------------------------------------------------------------

def _pair_vectors(domain: Domain) -> list[tuple[int, ...]]:
    """Per order: 1 where x is above y, for every pair x < y in lexicographic order."""
    pairs = list(itertools.combinations(range(1, domain.n + 1), 2))
    vectors = []
    for order in domain:
        pos = {v: idx for idx, v in enumerate(order.ranking)}
        vectors.append(tuple(1 if pos[x] < pos[y] else 0 for x, y in pairs))
    return vectors


def _is_transitive(tally: list[int], n: int, m: int, pairs: list[tuple[int, int]]) -> bool:
    wins = [0] * (n + 1)
    for (x, y), above in zip(pairs, tally):
        wins[x if 2 * above > m else y] += 1
    return sorted(wins[1:]) == list(range(n))


def _sweep_partition(
    vectors: list[tuple[int, ...]], n: int, m: int, first: int
) -> tuple[tuple[int, ...] | None, int]:
    """
    Check every profile whose first voter is vectors[first].  Returns the
    first cyclic profile (as domain indices) in lexicographic order, or None,
    and how many profiles were examined.
    """
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    head = vectors[first]
    checked = 0
    for rest in itertools.product(range(len(vectors)), repeat=m - 1):
        checked += 1
        tally = list(head)
        for idx in rest:
            for p, bit in enumerate(vectors[idx]):
                tally[p] += bit
        if not _is_transitive(tally, n, m, pairs):
            return (first, *rest), checked
    return None, checked


def is_condorcet_brute(
    domain: Domain,
    m: int,
    max_profiles: int = MAX_PROFILES,
    workers: int = SWEEP_WORKERS,
) -> CondorcetVerdict:
    """
    Check every profile in domain^m for a majority cycle.

    Raises:
        EvenProfile:   m even.
        ResourceLimit: |domain|^m above max_profiles.
    """
    if m < 1:
        raise MismatchedSize(f"m must be a positive odd number, got {m}.")
    if m % 2 == 0:
        raise EvenProfile(f"Condorcet sweep needs an odd number of voters, got m={m}.")
    total = len(domain) ** m
    if total > max_profiles:
        raise ResourceLimit("Profiles in D^m", total, max_profiles)

    vectors = _pair_vectors(domain)
    firsts = range(len(vectors))
    if workers > 1 and len(vectors) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(vectors))) as pool:
            results = list(
                pool.map(
                    _sweep_partition,
                    itertools.repeat(vectors),
                    itertools.repeat(domain.n),
                    itertools.repeat(m),
                    firsts,
                )
            )
        # Keep the partitions the serial sweep would have visited.
        cut = next((k for k, (found, _) in enumerate(results) if found is not None), None)
        if cut is not None:
            results = results[: cut + 1]
    else:
        results = []
        for first in firsts:
            found, checked = _sweep_partition(vectors, domain.n, m, first)
            results.append((found, checked))
            if found is not None:
                break

    checked_total = sum(checked for _, checked in results)
    witness_idx = next((found for found, _ in results if found is not None), None)
    if witness_idx is None:
        logger.info("Condorcet sweep: %d profiles, all acyclic.", checked_total)
        return CondorcetVerdict(True, checked_total)

    witness = Profile.from_orders(domain.orders[i] for i in witness_idx)
    logger.info(
        "Condorcet sweep: cyclic profile %s after %d profiles.",
        [str(o) for o in witness.voters],
        checked_total,
    )
    return CondorcetVerdict(False, checked_total, witness)
