"""
Rhombus tiling of the zonogon whose snakes are exactly SP([n]).

Given generators ξ_1, …, ξ_n in the upper half-plane, ordered by strictly
increasing slope x/y (ξ_1 leans furthest left), every interval I of the
interval digraph is placed at Σ_{i ∈ I} ξ_i.  Source = ∅ at the origin,
sink = [1, n] at ξ_1 + … + ξ_n.

One ij-tile per pair i < j:

  bottom  [i+1, j−1]   (∅ when j = i + 1)
  sides   [i, j−1] and [i+1, j]
  top     [i, j]

so n(n−1)/2 tiles in all.  Every arc of the interval digraph is an edge of
some tile, and all arcs point strictly upward.

Coordinates are Fractions throughout; floats appear only in the shapely
overlap check and in SVG output.
"""

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from shapely.geometry import Polygon

from errors import DegenerateGenerators, NotRealizable, NotSinglePeaked
from orders.core import (
    LinearOrder,
    identity_order,
    ideals,
    is_single_peaked,
    reversal_order,
)
from tiling.intervals import (
    EMPTY,
    Interval,
    IntervalGraph,
    build_interval_graph,
    interval_of,
    maximal_paths,
)

logger = logging.getLogger(__name__)

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Tile:
    i: int
    j: int
    bottom: Interval
    # Corners counter-clockwise from the bottom: bottom, +ξ_j, top, +ξ_i.
    corners: tuple[Point, Point, Point, Point]

    @property
    def anchor(self) -> Point:
        return self.corners[0]

    @property
    def top(self) -> Interval:
        return Interval(self.i, self.j)


@dataclass(frozen=True)
class TilingArc:
    tail: Interval
    head: Interval
    label: int


@dataclass(frozen=True)
class Snake:
    order: LinearOrder
    vertices: tuple[Interval, ...]
    arcs: tuple[TilingArc, ...]

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(a.label for a in self.arcs)


@dataclass(frozen=True)
class TilingGeometry:
    n: int
    generators: tuple[Point, ...]
    intervals: IntervalGraph
    vertices: dict[Interval, Point]
    tiles: tuple[Tile, ...]
    arcs: tuple[TilingArc, ...]

    @property
    def source(self) -> Point:
        return self.vertices[EMPTY]

    @property
    def sink(self) -> Point:
        return self.vertices[self.intervals.full]

    def snakes(self) -> list[Snake]:
        """Every source → sink snake, sorted by the order it spells."""
        return [snake_of(self, o) for o in maximal_paths(self.intervals)]

    def left_boundary(self) -> Snake:
        return snake_of(self, identity_order(self.n))

    def right_boundary(self) -> Snake:
        return snake_of(self, reversal_order(self.n))

    def outline(self) -> list[Point]:
        """Zonogon boundary, counter-clockwise from the source."""
        right = [self.vertices[v] for v in self.right_boundary().vertices]
        left = [self.vertices[v] for v in self.left_boundary().vertices]
        return right + left[-2:0:-1]


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def default_generators(n: int) -> tuple[Point, ...]:
    """ξ_i = (i − (n+1)/2, 1): symmetric about the y-axis, unit height."""
    centre = Fraction(n + 1, 2)
    return tuple((Fraction(i) - centre, Fraction(1)) for i in range(1, n + 1))


def _validate_generators(n: int, generators: Sequence[Sequence[object]]) -> tuple[Point, ...]:
    if len(generators) != n:
        raise DegenerateGenerators(f"Expected {n} generators, got {len(generators)}.")
    points: list[Point] = []
    for idx, g in enumerate(generators, start=1):
        if len(g) != 2:
            raise DegenerateGenerators(f"Generator {idx} is not a 2-vector: {g!r}.")
        try:
            x, y = Fraction(g[0]), Fraction(g[1])  # type: ignore[arg-type]
        except (TypeError, ValueError) as exc:
            raise DegenerateGenerators(f"Generator {idx} is not numeric: {g!r}.") from exc
        if y <= 0:
            raise DegenerateGenerators(f"Generator {idx} has non-positive height {y}.")
        points.append((x, y))
    for idx, ((x1, y1), (x2, y2)) in enumerate(zip(points, points[1:]), start=1):
        # x1/y1 < x2/y2 with positive heights
        if x1 * y2 >= x2 * y1:
            raise DegenerateGenerators(
                f"Generators {idx} and {idx + 1} are not in strictly increasing slope order."
            )
    return tuple(points)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def build_tiling(
    n: int, generators: Sequence[Sequence[object]] | None = None
) -> TilingGeometry:
    """
    The SP([n]) tiling.  generators default to default_generators(n).

    Raises:
        DegenerateGenerators: wrong count, non-positive heights, or slopes
                              not strictly increasing.
    """
    gens = default_generators(n) if generators is None else _validate_generators(n, generators)
    graph = build_interval_graph(n)

    vertices: dict[Interval, Point] = {}
    for node in graph.nodes:
        pos: Point = (Fraction(0), Fraction(0))
        for x in node.members():
            pos = _add(pos, gens[x - 1])
        vertices[node] = pos

    tiles = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        bottom = EMPTY if j == i + 1 else Interval(i + 1, j - 1)
        corners = (
            vertices[bottom],
            vertices[interval_of({*bottom.members(), j})],
            vertices[Interval(i, j)],
            vertices[interval_of({*bottom.members(), i})],
        )
        tiles.append(Tile(i, j, bottom, corners))

    arcs = tuple(TilingArc(u, v, label) for u, v, label in graph.arcs)
    tiling = TilingGeometry(n, gens, graph, vertices, tuple(tiles), arcs)

    check = check_tiling(tiling)
    if not check:
        logger.warning(
            "Tiling for n=%d failed its geometric check: tile area %s vs zonogon %s, "
            "%d overlapping pair(s).",
            n, check.tile_area, check.zonogon_area, len(check.overlaps),
        )
    logger.info("Tiling built: n=%d, %d tiles, %d vertices.", n, len(tiles), len(vertices))
    return tiling


def snake_of(tiling: TilingGeometry, order: LinearOrder) -> Snake:
    """
    The source → sink path whose arc labels spell order, top choice first.

    Raises:
        NotRealizable:   order is over a different n.
        NotSinglePeaked: order has a non-interval ideal.
    """
    if order.n != tiling.n:
        raise NotRealizable(f"Order {order} has n={order.n}; the tiling has n={tiling.n}.")
    verdict = is_single_peaked(order)
    if not verdict:
        raise NotSinglePeaked(order, verdict.violation or 0)
    path = (EMPTY, *(interval_of(ideal) for ideal in ideals(order)))
    arcs = tuple(TilingArc(u, v, x) for (u, v), x in zip(zip(path, path[1:]), order.ranking))
    return Snake(order, path, arcs)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TilingCheck:
    tile_area: Fraction
    zonogon_area: Fraction
    overlaps: list[tuple[tuple[int, int], tuple[int, int]]]

    def __bool__(self) -> bool:
        return self.tile_area == self.zonogon_area and not self.overlaps


def shoelace_area(points: Sequence[Point]) -> Fraction:
    twice = sum(
        (p[0] * q[1] - q[0] * p[1] for p, q in zip(points, [*points[1:], points[0]])),
        Fraction(0),
    )
    return abs(twice) / 2


def _polygon(points: Sequence[Point]) -> Polygon:
    return Polygon([(float(x), float(y)) for x, y in points])


def check_tiling(tiling: TilingGeometry, tolerance: float = 1e-9) -> TilingCheck:
    """Exact area balance plus pairwise interior-disjointness of the tiles."""
    tile_area = sum((shoelace_area(t.corners) for t in tiling.tiles), Fraction(0))
    zonogon_area = shoelace_area(tiling.outline()) if tiling.n > 1 else Fraction(0)

    polygons = [(t, _polygon(t.corners)) for t in tiling.tiles]
    overlaps = [
        ((a.i, a.j), (b.i, b.j))
        for (a, pa), (b, pb) in itertools.combinations(polygons, 2)
        if pa.intersection(pb).area > tolerance
    ]
    return TilingCheck(tile_area, zonogon_area, overlaps)
