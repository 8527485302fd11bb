"""Compute the visibility graph of a small terrain and check that it is persistent.

Run:  python3 demos/01_visibility_and_persistence.py
"""
from terravis import LabeledGraph, Terrain, is_persistent, sees, visibility_graph

T = Terrain.from_points([(0, 0), (1, 2), (2, 0), (3, 2), ("4.5", "1/2"), (6, 3)])
print("terrain:", [(str(x), str(y)) for x, y in T.points])
print("p1 sees p3:", sees(T, 1, 3), "  p0 sees p2:", sees(T, 0, 2))

G = visibility_graph(T)
print("visibility edges:", G.edges())
print("persistence:", is_persistent(G).lines())

# Graphs that no terrain can produce
crossing = LabeledGraph.from_edges(5, [(0, 3), (1, 4)])
lonely_chord = LabeledGraph.from_edges(5, [(0, 4)])
for name, H in [("crossing chords", crossing), ("unsupported chord", lonely_chord)]:
    print(f"{name}:", is_persistent(H).lines())
