"""SVG drawings of terrains and their visibility chords.

Floats are used here for page layout only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .terrain import Terrain, visibility_graph


@dataclass(frozen=True)
class RenderSpec:
    width: int = 800
    height: int = 400
    margin: int = 40
    draw_visibility_edges: bool = True
    highlight: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.width <= 2 * self.margin or self.height <= 2 * self.margin:
            raise ValueError("width and height must exceed twice the margin")


def render_svg(T: Terrain, spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec()
    xs = [float(x) for x, _ in T.points]
    ys = [float(y) for _, y in T.points]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    sx = (spec.width - 2 * spec.margin) / (x1 - x0)
    sy = (spec.height - 2 * spec.margin) / (y1 - y0) if y1 > y0 else 0.0

    def px(i):
        u = spec.margin + (xs[i] - x0) * sx
        v = spec.height - spec.margin - (ys[i] - y0) * sy
        if y1 == y0:
            v = spec.height / 2
        return round(u, 3), round(v, 3)

    coords = [px(i) for i in range(T.n)]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    if spec.draw_visibility_edges:
        for i, k in visibility_graph(T).chords():
            (a, b), (c, d) = coords[i], coords[k]
            out.append(
                f'<line class="chord" x1="{a}" y1="{b}" x2="{c}" y2="{d}" '
                'stroke="#3070c0" stroke-width="1" stroke-dasharray="4 3"/>'
            )
    pts = " ".join(f"{u},{v}" for u, v in coords)
    out.append(f'<polyline class="terrain" points="{pts}" fill="none" stroke="black" stroke-width="2"/>')
    for i, (u, v) in enumerate(coords):
        if i in spec.highlight:
            out.append(f'<circle class="vertex highlight" cx="{u}" cy="{v}" r="6" fill="#d03030"/>')
        else:
            out.append(f'<circle class="vertex" cx="{u}" cy="{v}" r="4" fill="black"/>')
        out.append(
            f'<text x="{u}" y="{round(v - 10, 3)}" font-size="12" text-anchor="middle">'
            f"{escape('p' + str(i))}</text>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
