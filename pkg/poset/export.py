"""
DOT rendering of Bruhat cover digraphs.

One node per order (label = compact ranking), one edge per cover arc, and a
rank=same group per inversion level so Graphviz draws the poset graded,
bottom to top.  Nodes and edges are emitted in sorted order and lines end
with LF, so identical domains always produce byte-identical text.

  $ python -m cli poset 4 --dot > sp4.dot && dot -Tsvg sp4.dot > sp4.svg
"""

from orders.core import format_order
from poset.bruhat import BruhatDigraph


def _quote(label: str) -> str:
    return '"' + label.replace('"', '\\"') + '"'


def export_digraph_dot(digraph: BruhatDigraph, name: str = "bruhat") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    append = lines.append

    for order in sorted(digraph.nodes):
        label = format_order(order)
        inv = digraph.inversion_set(order)
        append(f'  {_quote(label)} [tooltip={_quote(str(inv))}];')

    for level, orders in digraph.levels.items():
        members = " ".join(_quote(format_order(o)) for o in orders)
        append(f"  {{ rank=same; {members}; }}  // level {level}")

    for low, high in digraph.arcs:
        append(f"  {_quote(format_order(low))} -> {_quote(format_order(high))};")

    append("}")
    return "\n".join(lines) + "\n"


def export_edge_list(digraph: BruhatDigraph) -> str:
    """Plain "σ -> τ" lines, one per cover arc."""
    return "".join(f"{format_order(a)} -> {format_order(b)}\n" for a, b in digraph.arcs)
