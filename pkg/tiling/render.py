"""
SVG rendering of a tiling: one polygon per tile, boundary arcs labelled with
the alternative they add, and an optional snake drawn thick on top.

Geometry y grows upward; SVG y grows downward, so y is negated on output.
The viewBox fits the zonogon plus a 5% margin.  Coordinates are rounded to
3 decimals and elements are added in a fixed order, so output is stable.
"""

import logging
from fractions import Fraction

import svgwrite

from config import SVG_UNIT_PX
from orders.core import LinearOrder
from tiling.geometry import Point, TilingGeometry, snake_of

logger = logging.getLogger(__name__)

MARGIN = 0.05


def _xy(p: Point, unit: float) -> tuple[float, float]:
    return (round(float(p[0]) * unit, 3), round(-float(p[1]) * unit, 3))


def export_svg(
    tiling: TilingGeometry,
    highlight: LinearOrder | None = None,
    unit: float = SVG_UNIT_PX,
) -> str:
    """
    Raises:
        NotSinglePeaked: highlight given and not single-peaked.
        NotRealizable:   highlight over a different n.
    """
    snake = snake_of(tiling, highlight) if highlight is not None else None

    points = [_xy(p, unit) for p in tiling.vertices.values()]
    xs, ys = [p[0] for p in points], [p[1] for p in points]
    width, height = max(xs) - min(xs), max(ys) - min(ys)
    pad = round(MARGIN * max(width, height, unit), 3)
    min_x, min_y = round(min(xs) - pad, 3), round(min(ys) - pad, 3)
    box_w, box_h = round(width + 2 * pad, 3), round(height + 2 * pad, 3)

    dwg = svgwrite.Drawing(size=(f"{box_w}px", f"{box_h}px"), profile="full")
    dwg.viewbox(min_x, min_y, box_w, box_h)

    tiles = dwg.g(id="tiles", fill="#f4f1e8", stroke="black", stroke_width=1)
    for tile in tiling.tiles:
        tiles.add(
            dwg.polygon(
                [_xy(c, unit) for c in tile.corners],
                id=f"tile-{tile.i}-{tile.j}",
            )
        )
    dwg.add(tiles)

    labels = dwg.g(id="labels", font_size=round(unit / 5, 3), text_anchor="middle")
    centre_x = (tiling.source[0] + tiling.sink[0]) / 2
    for side in (tiling.left_boundary(), tiling.right_boundary()):
        for arc in side.arcs:
            tail, head = tiling.vertices[arc.tail], tiling.vertices[arc.head]
            mid: Point = ((tail[0] + head[0]) / 2, (tail[1] + head[1]) / 2)
            # outward, away from the vertical axis
            nudge = Fraction(1, 8) if mid[0] >= centre_x else Fraction(-1, 8)
            x, y = _xy((mid[0] + nudge, mid[1]), unit)
            labels.add(dwg.text(str(arc.label), insert=(x, y)))
    dwg.add(labels)

    if snake is not None:
        dwg.add(
            dwg.polyline(
                [_xy(tiling.vertices[v], unit) for v in snake.vertices],
                id="snake",
                fill="none",
                stroke="black",
                stroke_width=round(unit / 16, 3),
                stroke_linejoin="round",
            )
        )
        logger.debug("Highlighted snake %s.", highlight)

    return dwg.tostring()
