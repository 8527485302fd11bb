"""Draw a terrain with its visibility chords as SVG.

Run:  python3 demos/05_render_svg.py out.svg
"""
import sys

from terravis import RenderSpec, Terrain, render_svg

T = Terrain.from_points([(0, 0), (1, 3), (2, 1), (3, 4), (4, 0), (5, 2), (6, 1)])
svg = render_svg(T, RenderSpec(width=600, height=300, margin=30, highlight=frozenset({1, 3})))
path = sys.argv[1] if len(sys.argv) > 1 else "terrain.svg"
with open(path, "w", encoding="utf-8") as fh:
    fh.write(svg)
chords = svg.count('class="chord"')
print(f"wrote {path} ({chords} chords)")
