"""
Unit tests for the tiling package: interval digraph, tiling geometry and
SVG output.
"""

from fractions import Fraction
from math import comb

import pytest

from domains.analysis import enumerate_sp
from errors import DegenerateGenerators, MismatchedSize, NotRealizable, NotSinglePeaked
from orders.core import format_order, identity_order, parse_order, reversal_order
from signs.codec import Sign, decode, encode
from tiling.geometry import (
    build_tiling,
    check_tiling,
    default_generators,
    shoelace_area,
    snake_of,
)
from tiling.intervals import (
    EMPTY,
    Interval,
    build_interval_graph,
    export_dot,
    interval_of,
    maximal_paths,
)
from tiling.render import export_svg


def names(orders) -> list[str]:
    return [format_order(o) for o in orders]


# ---------------------------------------------------------------------------
# Intervals
# ---------------------------------------------------------------------------

class TestInterval:
    def test_empty(self):
        assert EMPTY.is_empty
        assert EMPTY.size == 0
        assert EMPTY.label() == "∅"
        assert EMPTY.to_json() is None
        assert Interval.from_json(None) == EMPTY

    def test_json(self):
        iv = Interval(2, 4)
        assert iv.to_json() == {"lo": 2, "hi": 4}
        assert Interval.from_json({"lo": 2, "hi": 4}) == iv
        assert iv.label() == "[2,4]"

    def test_json_rejects_reversed(self):
        with pytest.raises(MismatchedSize):
            Interval.from_json({"lo": 3, "hi": 2})

    def test_interval_of(self):
        assert interval_of({2, 3, 4}) == Interval(2, 4)
        assert interval_of(set()) == EMPTY
        with pytest.raises(MismatchedSize):
            interval_of({1, 3})


class TestIntervalGraph:
    @pytest.mark.parametrize("n, nodes, arcs", [(1, 2, 1), (2, 4, 4), (4, 11, 16)])
    def test_counts(self, n, nodes, arcs):
        g = build_interval_graph(n).graph
        assert g.number_of_nodes() == nodes
        assert g.number_of_edges() == arcs

    @pytest.mark.parametrize("n", range(1, 21))
    def test_node_count_formula(self, n):
        assert build_interval_graph(n).graph.number_of_nodes() == n * (n + 1) // 2 + 1

    def test_out_degrees(self):
        graph = build_interval_graph(5)
        g = graph.graph
        assert g.out_degree(EMPTY) == 5
        for node in graph.nodes:
            if node not in (EMPTY, graph.full):
                assert 1 <= g.out_degree(node) <= 2
        assert g.out_degree(graph.full) == 0

    def test_node_order(self):
        assert [iv.label() for iv in build_interval_graph(3).nodes] == [
            "∅", "[1,1]", "[2,2]", "[3,3]", "[1,2]", "[2,3]", "[1,3]",
        ]

    def test_out_arcs_are_sign_steps(self):
        # From any non-empty node the − arc adds lo−1 and the + arc adds hi+1.
        graph = build_interval_graph(6)
        for u, v, label in graph.arcs:
            if u.is_empty:
                continue
            step = Sign.MINUS if label == u.lo - 1 else Sign.PLUS
            assert v == (Interval(u.lo - 1, u.hi) if step is Sign.MINUS else Interval(u.lo, u.hi + 1))

    def test_maximal_paths_sp4(self):
        assert names(maximal_paths(build_interval_graph(4))) == names(enumerate_sp(4))

    @pytest.mark.parametrize("n", range(1, 13))
    def test_maximal_paths_are_sp(self, n):
        paths = maximal_paths(build_interval_graph(n))
        assert len(paths) == 2 ** (n - 1)
        assert paths == list(enumerate_sp(n).orders)

    def test_dot(self):
        dot = export_dot(build_interval_graph(2))
        assert dot.count(" -> ") == 4
        assert '"∅" -> "[1,1]" [label="1"];' in dot
        assert '"[2,2]" -> "[1,2]" [label="1"];' in dot
        assert dot.endswith("}\n")

    def test_dot_deterministic(self):
        assert export_dot(build_interval_graph(5)) == export_dot(build_interval_graph(5))


# ---------------------------------------------------------------------------
# Geometry
# ---------------------------------------------------------------------------

class TestBuildTiling:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_tile_count(self, n):
        assert len(build_tiling(n).tiles) == comb(n, 2)

    def test_default_generators(self):
        assert default_generators(4) == (
            (Fraction(-3, 2), Fraction(1)),
            (Fraction(-1, 2), Fraction(1)),
            (Fraction(1, 2), Fraction(1)),
            (Fraction(3, 2), Fraction(1)),
        )

    def test_source_and_sink(self):
        tiling = build_tiling(4)
        assert tiling.source == (0, 0)
        assert tiling.sink == (0, 4)

    def test_arcs_point_upward(self):
        tiling = build_tiling(6)
        for arc in tiling.arcs:
            assert tiling.vertices[arc.head][1] > tiling.vertices[arc.tail][1]

    def test_tile_corners(self):
        tiling = build_tiling(4)
        tile = next(t for t in tiling.tiles if (t.i, t.j) == (1, 4))
        assert tile.bottom == Interval(2, 3)
        assert tile.top == Interval(1, 4)
        assert tile.anchor == tiling.vertices[Interval(2, 3)]

    @pytest.mark.parametrize("n", range(2, 8))
    def test_geometric_check_passes(self, n):
        check = check_tiling(build_tiling(n))
        assert check
        assert check.overlaps == []
        assert check.tile_area == check.zonogon_area

    def test_custom_generators(self):
        tiling = build_tiling(3, [(-2, 1), (0, 2), (1, 1)])
        assert check_tiling(tiling)
        assert tiling.sink == (Fraction(-1), Fraction(4))

    @pytest.mark.parametrize(
        "generators",
        [
            [(-1, 1), (1, 1)],
            [(-1, 1), (1, 0), (2, 1)],
            [(1, 1), (0, 1), (2, 1)],
            [(0, 1), (0, 2), (1, 1)],
            [(0, 1), ("a", 1), (1, 1)],
        ],
    )
    def test_degenerate_generators(self, generators):
        with pytest.raises(DegenerateGenerators):
            build_tiling(3, generators)

    def test_shoelace(self):
        square = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)),
                  (Fraction(1), Fraction(1)), (Fraction(0), Fraction(1))]
        assert shoelace_area(square) == 1


class TestSnakes:
    def test_snake_set_is_sp4(self):
        tiling = build_tiling(4)
        assert [s.order for s in tiling.snakes()] == list(enumerate_sp(4).orders)

    def test_small_snake_sets(self):
        assert names(s.order for s in build_tiling(2).snakes()) == ["12", "21"]
        assert names(s.order for s in build_tiling(3).snakes()) == ["123", "213", "231", "321"]

    def test_highlighted_snake(self):
        snake = snake_of(build_tiling(4), parse_order("2314"))
        assert snake.labels == (2, 3, 1, 4)
        assert sorted(snake.labels) == [1, 2, 3, 4]
        assert snake.vertices == (
            EMPTY, Interval(2, 2), Interval(2, 3), Interval(1, 3), Interval(1, 4),
        )

    def test_boundaries(self):
        tiling = build_tiling(5)
        assert tiling.left_boundary().order == identity_order(5)
        assert tiling.right_boundary().order == reversal_order(5)
        assert decode(encode(tiling.left_boundary().order)) == identity_order(5)

    def test_left_boundary_is_leftmost(self):
        tiling = build_tiling(4)
        left = [tiling.vertices[v][0] for v in tiling.left_boundary().vertices]
        for snake in tiling.snakes():
            xs = [tiling.vertices[v][0] for v in snake.vertices]
            assert all(a <= b for a, b in zip(left, xs))

    def test_not_single_peaked(self):
        with pytest.raises(NotSinglePeaked):
            snake_of(build_tiling(4), parse_order("2413"))

    def test_wrong_n(self):
        with pytest.raises(NotRealizable):
            snake_of(build_tiling(4), parse_order("231"))


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

class TestSvg:
    def test_single_rhombus(self):
        svg = export_svg(build_tiling(2))
        assert svg.count("<polygon") == 1
        assert 'id="snake"' not in svg

    def test_sp4_with_snake(self):
        svg = export_svg(build_tiling(4), parse_order("2314"))
        assert svg.count("<polygon") == 6
        assert svg.count('id="snake"') == 1
        assert "viewBox" in svg

    def test_ten_tiles_for_five(self):
        assert export_svg(build_tiling(5)).count("<polygon") == 10

    def test_invalid_highlight(self):
        with pytest.raises(NotSinglePeaked):
            export_svg(build_tiling(4), parse_order("2413"))

    def test_deterministic(self):
        tiling = build_tiling(4)
        assert export_svg(tiling, parse_order("2314")) == export_svg(tiling, parse_order("2314"))
