"""
The interval digraph: every ideal of a single-peaked order as a node.

Nodes are ∅ plus the n(n+1)/2 consecutive intervals [lo, hi] of 1..n.
Arcs extend an interval by one alternative, labelled with that alternative:

  ∅        → [x, x]       for every x          (out-degree n)
  [lo, hi] → [lo−1, hi]   when lo > 1
  [lo, hi] → [lo, hi+1]   when hi < n          (out-degree ≤ 2)

Reading the labels along a maximal ∅ → [1, n] path gives a single-peaked
order, and every single-peaked order arises exactly once; the two out-arcs
of a non-empty node are the − and + steps of the sign encoding.
"""

import logging
from dataclasses import dataclass
from typing import Any, NamedTuple

import networkx as nx
from pydantic import BaseModel, Field

from errors import MismatchedSize
from orders.core import LinearOrder

logger = logging.getLogger(__name__)


class Interval(NamedTuple):
    lo: int
    hi: int

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    @property
    def is_empty(self) -> bool:
        return self.hi < self.lo

    def members(self) -> range:
        return range(self.lo, self.hi + 1)

    def label(self) -> str:
        return "∅" if self.is_empty else f"[{self.lo},{self.hi}]"

    def to_json(self) -> dict[str, int] | None:
        return None if self.is_empty else {"lo": self.lo, "hi": self.hi}

    @classmethod
    def from_json(cls, data: dict[str, Any] | None) -> "Interval":
        if data is None:
            return EMPTY
        model = IntervalModel.model_validate(data)
        if model.hi < model.lo:
            raise MismatchedSize(f"Interval [{model.lo},{model.hi}] has hi < lo.")
        return cls(model.lo, model.hi)


EMPTY = Interval(1, 0)


class IntervalModel(BaseModel):
    lo: int = Field(ge=1)
    hi: int = Field(ge=1)


def interval_of(alternatives: frozenset[int] | set[int]) -> Interval:
    """The interval equal to a set of consecutive alternatives."""
    if not alternatives:
        return EMPTY
    lo, hi = min(alternatives), max(alternatives)
    if hi - lo + 1 != len(alternatives):
        raise MismatchedSize(f"{sorted(alternatives)} is not a set of consecutive alternatives.")
    return Interval(lo, hi)


def node_key(interval: Interval) -> tuple[int, int]:
    """Node ordering: by length, then left endpoint; ∅ first."""
    return (0, 0) if interval.is_empty else (interval.size, interval.lo)


@dataclass(frozen=True)
class IntervalGraph:
    n: int
    graph: "nx.DiGraph[Interval]"

    @property
    def nodes(self) -> list[Interval]:
        return sorted(self.graph.nodes, key=node_key)

    @property
    def arcs(self) -> list[tuple[Interval, Interval, int]]:
        """(from, to, added alternative), sorted by the endpoints' node order."""
        return sorted(
            ((u, v, d["label"]) for u, v, d in self.graph.edges(data=True)),
            key=lambda arc: (node_key(arc[0]), node_key(arc[1])),
        )

    @property
    def full(self) -> Interval:
        return Interval(1, self.n)


def build_interval_graph(n: int) -> IntervalGraph:
    if n < 1:
        raise MismatchedSize(f"n must be positive, got {n}.")
    G: nx.DiGraph[Interval] = nx.DiGraph()
    G.add_node(EMPTY)
    for x in range(1, n + 1):
        G.add_edge(EMPTY, Interval(x, x), label=x)
    for size in range(1, n + 1):
        for lo in range(1, n - size + 2):
            node = Interval(lo, lo + size - 1)
            G.add_node(node)
            if node.lo > 1:
                G.add_edge(node, Interval(node.lo - 1, node.hi), label=node.lo - 1)
            if node.hi < n:
                G.add_edge(node, Interval(node.lo, node.hi + 1), label=node.hi + 1)
    logger.debug(
        "Interval graph for n=%d: %d nodes, %d arcs.", n, G.number_of_nodes(), G.number_of_edges()
    )
    return IntervalGraph(n, G)


def path_order(graph: IntervalGraph, path: list[Interval]) -> LinearOrder:
    """The order spelled by the arc labels of a node path."""
    G = graph.graph
    return LinearOrder(tuple(G.edges[u, v]["label"] for u, v in zip(path, path[1:])))


def maximal_paths(graph: IntervalGraph) -> list[LinearOrder]:
    """Orders read off every ∅ → [1, n] path, sorted."""
    paths = nx.all_simple_paths(graph.graph, EMPTY, graph.full)
    return sorted(path_order(graph, p) for p in paths)


def export_dot(graph: IntervalGraph, name: str = "intervals") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for node in graph.nodes:
        lines.append(f'  "{node.label()}";')
    for u, v, label in graph.arcs:
        lines.append(f'  "{u.label()}" -> "{v.label()}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
