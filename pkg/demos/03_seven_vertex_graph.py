"""The seven-vertex graph whose realizability depends on the x-coordinates.

It has a terrain over X exactly when d01*d23*d34*d56 > d12*d45*d03*d36.
Here we compare that product test with the LP solver and the closed-form
witnesses on a few vectors.

Run:  python3 demos/03_seven_vertex_graph.py
"""
from fractions import Fraction
import random

from terravis import (
    closed_form_y,
    closed_form_z,
    gen_gprime,
    gprime_canonical_system,
    gprime_inequality,
    reconstruct,
    verify_farkas,
    verify_feasible,
)
from terravis.counterexamples import closed_form_epsilon, gprime_products, random_xvector

G = gen_gprime()
print("chords:", G.chords())

samples = [tuple(range(7)), (0, 10, Fraction(101, 10), 20, 30, Fraction(301, 10), 40)]
rng = random.Random(1)
samples += [random_xvector(rng, 7) for _ in range(4)]

for X in samples:
    left, right = gprime_products(X)
    r = reconstruct(G, X)
    line = f"{[str(x) for x in X]}: {left} vs {right} -> {'terrain' if r.ok else 'no terrain'}"
    if gprime_inequality(X):
        eps = closed_form_epsilon(X)
        ok = verify_feasible(gprime_canonical_system(X, eps), closed_form_y(X))
        line += f"; closed-form heights feasible at eps={eps}: {ok}"
    else:
        ok = verify_farkas(gprime_canonical_system(X), closed_form_z(X))
        line += f"; closed-form certificate valid: {ok}"
    print(line)
