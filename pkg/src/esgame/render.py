"""Deterministic SVG rendering of positions and region overlays.

All geometry stays exact until emission; coordinates convert to floats
only when formatted into the SVG text.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .geometry import Point, convex_layers, point_from_strings
from .referee import GameState

VIEW = 1000.0
MARGIN = 60.0

_LAYER_COLORS = ("#2c7fb8", "#7fcdbb", "#c7e9b4", "#edf8b1")


def _bounds(points: Sequence[Point]) -> tuple[float, float, float, float]:
    if not points:
        return (-1.0, 1.0, -1.0, 1.0)
    xs = [float(p.x) for p in points]
    ys = [float(p.y) for p in points]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    if hi_x - lo_x < 1e-9:
        lo_x, hi_x = lo_x - 1, hi_x + 1
    if hi_y - lo_y < 1e-9:
        lo_y, hi_y = lo_y - 1, hi_y + 1
    return lo_x, hi_x, lo_y, hi_y


class _Mapper:
    def __init__(self, points: Sequence[Point]):
        lo_x, hi_x, lo_y, hi_y = _bounds(points)
        span = max(hi_x - lo_x, hi_y - lo_y)
        self.scale = (VIEW - 2 * MARGIN) / span
        self.cx, self.cy = (lo_x + hi_x) / 2, (lo_y + hi_y) / 2

    def map(self, p: Point) -> tuple[float, float]:
        # y flips: SVG grows downward
        x = VIEW / 2 + (float(p.x) - self.cx) * self.scale
        y = VIEW / 2 - (float(p.y) - self.cy) * self.scale
        return x, y

    def fmt(self, p: Point) -> str:
        x, y = self.map(p)
        return f"{x:.2f},{y:.2f}"


def render_svg(state: GameState, overlay: Optional[dict] = None) -> str:
    """SVG document: move-indexed points, convex-layer polylines,
    optional losing-region fills, witness polygon of a finished game."""
    pts = state.moves
    mapper = _Mapper(pts)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {VIEW:.0f} {VIEW:.0f}">',
        f'<rect width="{VIEW:.0f}" height="{VIEW:.0f}" fill="#fcfcf7"/>',
    ]
    if overlay:
        for poly in overlay.get("losing_regions", []):
            coords = " ".join(
                mapper.fmt(point_from_strings(p["x"], p["y"]) if isinstance(p, dict) else p)
                for p in poly
            )
            parts.append(
                f'<polygon points="{coords}" fill="#e3433b" fill-opacity="0.25" stroke="none"/>'
            )
    if len(pts) >= 3:
        for li, layer in enumerate(convex_layers(pts)):
            if len(layer) < 2:
                continue
            coords = " ".join(mapper.fmt(p) for p in layer)
            color = _LAYER_COLORS[li % len(_LAYER_COLORS)]
            parts.append(
                f'<polygon points="{coords}" fill="none" stroke="{color}" stroke-width="2"/>'
            )
    if state.finished is not None:
        witness = [pts[i] for i in state.finished.witness]
        coords = " ".join(mapper.fmt(p) for p in witness)
        parts.append(
            f'<polygon points="{coords}" fill="#f7d04b" fill-opacity="0.45" '
            f'stroke="#b8860b" stroke-width="3"/>'
        )
    for idx, p in enumerate(pts):
        x, y = mapper.map(p)
        player_color = "#1a1a64" if idx % 2 == 0 else "#8c1a1a"
        parts.append(
            f'<circle class="move-point" cx="{x:.2f}" cy="{y:.2f}" r="9" fill="{player_color}"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{y - 14:.2f}" font-size="20" text-anchor="middle" '
            f'fill="#333">{idx + 1}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def overlay_from_cells(cells) -> dict:
    """Overlay payload from losing cells: clipped polygons, exact."""
    return {
        "losing_regions": [list(cell.polygon) for cell in cells],
    }
