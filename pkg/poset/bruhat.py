"""
The Bruhat order on a domain and its cover digraph.

  σ ≪ τ   iff   Inv(σ) ⊆ Inv(τ)

Digraph structure (networkx DiGraph):
  Nodes — LinearOrder, attributed with
            {level: |Inv|, inversions: InversionSet, label: compact ranking}
  Arcs  — σ → τ whenever τ covers σ inside the domain: Inv(σ) ⊂ Inv(τ) and
          |Inv(τ)| = |Inv(σ)| + 1.  The cover test is pairwise on inversion
          sets; intermediate orders outside the domain are not required.

Arcs only ever join adjacent levels, so candidates are bucketed by
inversion count and only level k × level k+1 pairs are compared.  The
digraph is graded and acyclic by construction.
"""

import logging
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from math import comb

import networkx as nx

from domains.model import Domain
from errors import MismatchedSize, OrderNotInDomain
from orders.core import (
    InversionSet,
    LinearOrder,
    format_order,
    identity_order,
    inversions,
    reversal_order,
)

logger = logging.getLogger(__name__)

Arc = tuple[LinearOrder, LinearOrder]


@dataclass(frozen=True)
class BruhatDigraph:
    domain: Domain
    graph: "nx.DiGraph[LinearOrder]"

    @property
    def nodes(self) -> tuple[LinearOrder, ...]:
        return self.domain.orders

    @property
    def arcs(self) -> list[Arc]:
        """Cover arcs sorted lexicographically by (source, target) ranking."""
        return sorted(self.graph.edges())

    @property
    def levels(self) -> dict[int, list[LinearOrder]]:
        """Orders grouped by inversion count, each group sorted."""
        grouped: dict[int, list[LinearOrder]] = defaultdict(list)
        for order in self.domain:
            grouped[self.graph.nodes[order]["level"]].append(order)
        return dict(sorted(grouped.items()))

    def inversion_set(self, order: LinearOrder) -> InversionSet:
        return self.graph.nodes[order]["inversions"]

    def level(self, order: LinearOrder) -> int:
        return self.graph.nodes[order]["level"]


def leq(a: LinearOrder, b: LinearOrder) -> bool:
    """a ≪ b: every inversion of a is an inversion of b."""
    if a.n != b.n:
        raise MismatchedSize(f"Cannot compare {a} (n={a.n}) with {b} (n={b.n}).")
    return inversions(a).issubset(inversions(b))


def build_cover_digraph(domain: Domain) -> BruhatDigraph:
    """Cover digraph of the domain under inversion-set inclusion."""
    G: nx.DiGraph[LinearOrder] = nx.DiGraph()
    buckets: dict[int, list[tuple[LinearOrder, int]]] = defaultdict(list)
    for order in domain:
        inv = inversions(order)
        G.add_node(order, level=len(inv), inversions=inv, label=format_order(order))
        buckets[len(inv)].append((order, inv.mask))

    for level in sorted(buckets):
        upper = buckets.get(level + 1)
        if not upper:
            continue
        for low, low_mask in buckets[level]:
            for high, high_mask in upper:
                # One more inversion plus inclusion: the masks differ in one bit.
                if low_mask & ~high_mask == 0:
                    G.add_edge(low, high)

    logger.info(
        "Cover digraph built: %d nodes, %d arcs over %d levels.",
        G.number_of_nodes(),
        G.number_of_edges(),
        len(buckets),
    )
    return BruhatDigraph(domain, G)


def find_path(
    digraph: BruhatDigraph, source: LinearOrder, target: LinearOrder
) -> list[LinearOrder] | None:
    """
    A directed cover path from source to target, or None when none exists.

    Each step takes the lexicographically smallest successor that can still
    reach target, so the result is the lexicographically least path and is
    stable across runs.  All arcs are unit steps, so a path's length is
    always level(target) − level(source).

    Raises:
        OrderNotInDomain: if either endpoint is not in the digraph's domain.
    """
    G = digraph.graph
    if source not in G:
        raise OrderNotInDomain(f"Source order {source} is not in the domain.")
    if target not in G:
        raise OrderNotInDomain(f"Target order {target} is not in the domain.")
    if source == target:
        return [source]

    can_reach = nx.ancestors(G, target) | {target}
    if source not in can_reach:
        logger.debug("No cover path from %s to %s.", source, target)
        return None

    path = [source]
    current = source
    while current != target:
        current = min(s for s in G.successors(current) if s in can_reach)
        path.append(current)
    return path


def is_semi_connected(domain: Domain) -> bool:
    """α and ω both present and joined by a directed cover path."""
    alpha, omega_order = identity_order(domain.n), reversal_order(domain.n)
    if alpha not in domain or omega_order not in domain:
        return False
    return find_path(build_cover_digraph(domain), alpha, omega_order) is not None


def min_semi_connected_size(n: int) -> int:
    """A cover path from α to ω visits binom(n, 2) + 1 orders."""
    return comb(n, 2) + 1


# ---------------------------------------------------------------------------
# Meets, joins, lattice check
# ---------------------------------------------------------------------------

def _extreme(candidates: Iterable[int], maximum: bool) -> int | None:
    """
    The inclusion-maximum (or minimum) of a set of masks; None when the set
    has no element comparable above (below) all the others.
    """
    pool = list(candidates)
    if maximum:
        best = [c for c in pool if all(d & ~c == 0 for d in pool)]
    else:
        best = [c for c in pool if all(c & ~d == 0 for d in pool)]
    return best[0] if len(best) == 1 else None


def _bound(
    masks: dict[LinearOrder, int], a: LinearOrder, b: LinearOrder, upper: bool
) -> LinearOrder | None:
    ma, mb = masks[a], masks[b]
    if upper:
        pool = {m: o for o, m in masks.items() if ma & ~m == 0 and mb & ~m == 0}
    else:
        pool = {m: o for o, m in masks.items() if m & ~ma == 0 and m & ~mb == 0}
    found = _extreme(pool, maximum=not upper)
    return pool[found] if found is not None else None


def _masks(domain: Domain, *orders: LinearOrder) -> dict[LinearOrder, int]:
    for order in orders:
        if order not in domain:
            raise OrderNotInDomain(f"Order {order} is not in the domain.")
    return {o: inversions(o).mask for o in domain}


def join(domain: Domain, a: LinearOrder, b: LinearOrder) -> LinearOrder | None:
    """Least upper bound of a and b inside the domain, or None."""
    return _bound(_masks(domain, a, b), a, b, upper=True)


def meet(domain: Domain, a: LinearOrder, b: LinearOrder) -> LinearOrder | None:
    """Greatest lower bound of a and b inside the domain, or None."""
    return _bound(_masks(domain, a, b), a, b, upper=False)


def is_lattice(domain: Domain) -> bool:
    """Brute-force: every pair has a unique join and meet within the domain."""
    masks = _masks(domain)
    orders = domain.orders
    for idx, a in enumerate(orders):
        for b in orders[idx + 1:]:
            if _bound(masks, a, b, upper=True) is None:
                logger.debug("No join for %s and %s in the domain.", a, b)
                return False
            if _bound(masks, a, b, upper=False) is None:
                logger.debug("No meet for %s and %s in the domain.", a, b)
                return False
    return True
