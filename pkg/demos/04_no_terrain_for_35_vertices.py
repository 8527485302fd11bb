"""The 35-vertex persistent graph built from five interleaved seven-vertex copies.

For any x-coordinates one colour class fails its product test, and the
multipliers for that copy, padded with zeros, rule out the whole system.

Run:  python3 demos/04_no_terrain_for_35_vertices.py [samples]
"""
import sys

from terravis import build_constraints, check_lemma_noX, gen_gstar, is_persistent, verify_farkas, verify_theorem1
from terravis.counterexamples import padded_certificate

G = gen_gstar()
print(f"{G.n} vertices, {len(G.edges())} edges, persistent: {is_persistent(G).persistent}")

X = tuple(range(35))
S = build_constraints(G, X)
color = check_lemma_noX(X)
z = padded_certificate(S, color, X)
print(f"uniform X: {S.m} rows; colour {color!r} fails; padded certificate "
      f"with {sum(1 for v in z if v)} nonzeros valid: {verify_farkas(S, z)}")

samples = int(sys.argv[1]) if len(sys.argv) > 1 else 5
print("\n".join(verify_theorem1(samples, seed=42).lines()))
