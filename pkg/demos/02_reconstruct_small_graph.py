"""Turn a persistent graph plus x-coordinates into a linear system and solve it exactly.

Run:  python3 demos/02_reconstruct_small_graph.py
"""
from terravis import LabeledGraph, build_constraints, reconstruct, solve_feasibility, visibility_graph

G = LabeledGraph.from_edges(4, [(0, 2)])  # path plus one chord
X = (0, 1, 2, 3)

S = build_constraints(G, X)
print("full system:")
print(S.to_text())

P = build_constraints(G, X, prune=True)
print("after dropping dominated rows:")
print(P.to_text())

out = solve_feasibility(S)
print(out.to_text())

r = reconstruct(G, X)
print("terrain heights:", [str(y) for y in r.terrain.ys], " min slack:", r.slack)
print("graph reproduced:", visibility_graph(r.terrain) == G)
