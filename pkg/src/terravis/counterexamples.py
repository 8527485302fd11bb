"""The seven-vertex graph G', the 35-vertex graph G*, and their certificates.

G' is realizable over x-coordinates ``X`` iff

    d01*d23*d34*d56 > d12*d45*d03*d36.

G* interleaves five copies of G' (one per colour) so that no choice of 35
increasing x-coordinates satisfies the inequality for every colour, hence no
terrain has G* as its visibility graph even though G* is persistent.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .constraints import GPRIME_CANONICAL_ROWS
from .graph import LabeledGraph, is_persistent
from .lp import verify_farkas
from .terrain import XVector

COLORS = ("g", "r", "b", "m", "y")
COLOR_NAMES = {"g": "green", "r": "red", "b": "blue", "m": "magenta", "y": "yellow"}

GPRIME_EDGES = (
    (0, 3), (0, 4), (0, 5), (0, 6),
    (1, 3), (1, 6),
    (2, 6),
    (3, 5), (3, 6),
)

# Left-to-right order of the 35 vertices of G*.
GSTAR_ORDER = (
    "g0 g1 r0 r1 b0 b1 g2 g3 g4 m0 m1 g5 g6 m2 m3 m4 b2 b3 b4 "
    "r2 r3 r4 y0 y1 r5 r6 y2 y3 y4 b5 b6 m5 m6 y5 y6"
).split()
GSTAR_INDEX = {name: i for i, name in enumerate(GSTAR_ORDER)}

COLOR_CLASSES = {
    c: tuple(GSTAR_INDEX[f"{c}{t}"] for t in range(7)) for c in COLORS
}

# Same-colour edges, written once per colour in the G* edge listing.
_COLOR_BLOCK = {0: (1, 3, 4, 5, 6), 1: (2, 3, 6), 2: (3, 6), 3: (4, 5, 6), 4: (5,), 5: (6,)}

# Edges joining vertices of different colours, beyond the Hamiltonian path.
_GSTAR_CROSS = """
g0: m0 m1 m2 m3 m4 b2 b3 b4 r2 r3 r4 r5 r6 y2 y3 y4 b5 b6 m5 m6 y5 y6
g1: r0 r1 b0 b1 m2 m3 m4 b2 b3 b4 r2 r3 r4 r5 r6 y2 y3 y4 b5 b6 m5 m6 y5 y6
r0: y2 y3 y4 b5 b6 m5 m6 y5 y6
r1: b3 b4 y2 y3 y4 b5 b6 m5 m6 y5 y6
b0: r2 r3 r6 y2 y3 y4 b5 b6 m5 m6 y5 y6
b1: m4 m5 m6 y5 y6
g2: m2 m3 m4 m5 m6 y5 y6
g3: m0 m1 m2 m3 m4 m5 m6 y5 y6
g4: m1 m2 m3 m4 m5 m6 y5 y6
m0: y5 y6
m1: y5 y6
g5: m2
m2: y5 y6
m3: y5 y6
m4: y5 y6
b2: m5 y5 y6
b3: r2 y4 m5 y5 y6
b4: y4 y5 y6
r2: y2 y3 y4 y5 y6
r3: y2 y3 y4 y5 y6
r4: y1 y2 y3 y4 y5 y6
r5: y2
b5: y5
b6: y5
m5: y5
"""


@dataclass(frozen=True)
class ColorClass:
    color: str
    indices: tuple


def _cross_edges() -> list[tuple[int, int]]:
    edges = []
    for line in _GSTAR_CROSS.strip().splitlines():
        src, targets = line.split(":")
        for t in targets.split():
            edges.append((GSTAR_INDEX[src.strip()], GSTAR_INDEX[t]))
    return edges


def gen_gprime() -> LabeledGraph:
    return LabeledGraph.from_edges(7, GPRIME_EDGES)


def gen_gstar() -> LabeledGraph:
    """G*: path edges, a copy of G' inside each colour, and the cross-colour edges."""
    edges = []
    for idx in COLOR_CLASSES.values():
        edges += [(idx[a], idx[b]) for a, targets in _COLOR_BLOCK.items() for b in targets]
    edges += _cross_edges()
    return LabeledGraph.from_edges(35, edges)


def color_classes() -> list[ColorClass]:
    return [ColorClass(c, COLOR_CLASSES[c]) for c in COLORS]


# -- the inequality and its closed-form witnesses ------------------------------

def _dist(X: Sequence) -> "callable":
    X = X if isinstance(X, XVector) else XVector(X)
    if len(X) != 7:
        raise ValueError(f"expected 7 x-coordinates, got {len(X)}")
    return X.d


def gprime_products(X7: Sequence) -> tuple[Fraction, Fraction]:
    """``(d01*d23*d34*d56, d12*d45*d03*d36)``."""
    d = _dist(X7)
    return d(0, 1) * d(2, 3) * d(3, 4) * d(5, 6), d(1, 2) * d(4, 5) * d(0, 3) * d(3, 6)


def gprime_inequality(X7: Sequence) -> bool:
    left, right = gprime_products(X7)
    return left > right


def closed_form_epsilon(X7: Sequence) -> Fraction:
    """Smaller of the two row values achieved by :func:`closed_form_y`."""
    return min(closed_form_slacks(X7))


def closed_form_slacks(X7: Sequence) -> tuple:
    """Values of the six canonical rows at :func:`closed_form_y`, in closed form."""
    d = _dist(X7)
    left, right = gprime_products(X7)
    common = d(3, 5) * (left - right)
    row5 = d(3, 5) * (
        d(0, 1) * d(3, 4) * d(5, 6) * d(3, 5)
        + d(3, 4) * d(5, 6) * d(0, 2) * d(3, 6)
        + d(1, 2) * d(5, 6) * d(3, 5) * d(3, 6)
        + d(3, 4) * d(5, 6) * d(3, 5) * d(3, 6)
        + d(1, 2) * d(0, 3) * d(3, 6) * d(3, 5)
    )
    return (common, common, common, common, row5, common)


def closed_form_y(X7: Sequence) -> tuple:
    """Explicit heights realizing G' whenever :func:`gprime_inequality` holds."""
    d = _dist(X7)
    d01, d02, d03 = d(0, 1), d(0, 2), d(0, 3)
    d12, d23, d34, d35, d36 = d(1, 2), d(2, 3), d(3, 4), d(3, 5), d(3, 6)
    d45, d56 = d(4, 5), d(5, 6)
    zero = Fraction(0)
    y0 = (
        d01 * d23 * d35 * d56
        + d03 * d35 * d01 * d23
        + d03 * d35 * d01 * d45
        + d45 * d03 * d02 * d36
        + d03 * d35 * d45 * d36
    )
    y1 = d12 * d45 * d03 * d36 - d01 * d23 * d34 * d56
    y2 = -d23 * d56 * (d34 * d02 + d35 * (d12 + d34)) - d12 * d03 * d35 * (d23 + d45)
    y4 = -d01 * d34 * d35 * (d23 + d45) - d45 * d36 * (d34 * (d02 + d35) + d12 * d35)
    y6 = (
        d01 * d34 * d56 * d35
        + d34 * d56 * d02 * d36
        + d12 * d56 * d35 * d36
        + d34 * d56 * d35 * d36
        + d12 * d03 * d36 * d35
    )
    return (y0, y1, y2, zero, y4, zero, y6)


def closed_form_z(X7: Sequence) -> tuple:
    """Farkas multipliers for the six canonical rows when the inequality fails."""
    d = _dist(X7)
    d01, d02, d03 = d(0, 1), d(0, 2), d(0, 3)
    d12, d34, d35, d36 = d(1, 2), d(3, 4), d(3, 5), d(3, 6)
    d56 = d(5, 6)
    left, right = gprime_products(X7)
    return (
        -(d34 * d56) / (d12 * d03),
        -d56 / d03,
        -(d34 * d56 * d02) / (d12 * d03 * d35),
        -(d01 * d34 * d56) / (d12 * d03 * d36),
        (left - right) / (d12 * d03 * d36 * d35),
        Fraction(-1),
    )


def check_lemma_helper(X7: Sequence) -> bool:
    """The inequality forces a short middle gap on the left or on the right."""
    d = _dist(X7)
    if not gprime_inequality(X7):
        return True
    return d(1, 2) < min(d(0, 1), d(2, 3)) or d(4, 5) < min(d(3, 4), d(5, 6))


class NoViolation(AssertionError):
    """Every colour satisfied the inequality; this would refute G*'s construction."""


def check_lemma_noX(X35: Sequence) -> str:
    """First colour (in g, r, b, m, y order) whose projected x-coordinates fail the inequality."""
    X = X35 if isinstance(X35, XVector) else XVector(X35)
    if len(X) != 35:
        raise ValueError(f"expected 35 x-coordinates, got {len(X)}")
    for c in COLORS:
        if not gprime_inequality(X.project(COLOR_CLASSES[c])):
            return c
    raise NoViolation(f"every colour satisfies the inequality for X={list(X)}")


# -- sampling ---------------------------------------------------------------

def random_xvector(rng: random.Random, n: int, max_num: int = 100, max_den: int = 12) -> XVector:
    """Strictly increasing rationals: cumulative sums of positive random gaps."""
    x = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
    xs = [x]
    for _ in range(n - 1):
        x += Fraction(rng.randint(1, max_num), rng.randint(1, max_den))
        xs.append(x)
    return XVector(xs)


# -- impossibility check ----------------------------------------------------

@dataclass
class TheoremReport:
    samples: int
    seed: int
    no_terrain: int = 0
    padded_verified: int = 0
    colors: dict = field(default_factory=lambda: {c: 0 for c in COLORS})
    persistent: bool = False

    @property
    def ok(self) -> bool:
        return self.persistent and self.no_terrain == self.samples == self.padded_verified

    def lines(self) -> list[str]:
        out = [
            f"G* persistent: {'yes' if self.persistent else 'NO'}",
            f"samples: {self.samples} (seed {self.seed})",
            f"no terrain (solver certificate verified): {self.no_terrain}/{self.samples}",
            f"padded colour certificate verified: {self.padded_verified}/{self.samples}",
            "violating colour counts: "
            + " ".join(f"{c}={self.colors[c]}" for c in COLORS),
            "RESULT: " + ("PASS" if self.ok else "FAIL"),
        ]
        return out


class TheoremCheckFailed(AssertionError):
    def __init__(self, message: str, X=None):
        self.X = X
        super().__init__(message if X is None else f"{message}; X={[str(v) for v in X]}")


def padded_certificate(system, color: str, X35: Sequence) -> tuple:
    """Place the closed-form multipliers of one colour on its six rows of the G* system."""
    idx = COLOR_CLASSES[color]
    X = X35 if isinstance(X35, XVector) else XVector(X35)
    z_small = closed_form_z(X.project(idx))
    z = [Fraction(0)] * system.m
    for value, (kind, i, j, k) in zip(z_small, GPRIME_CANONICAL_ROWS):
        z[system.find(kind, idx[i], idx[j], idx[k])] = value
    return tuple(z)


def verify_theorem1(samples: int, seed: int = 0, X_list=None) -> TheoremReport:
    """Check that G* has no terrain over ``samples`` random x-vectors (and any given ones).

    Each sample must (a) be reported infeasible by the solver with a verified
    certificate and (b) admit the zero-padded closed-form colour certificate.
    Any failure raises :class:`TheoremCheckFailed`.
    """
    from .reconstruction import NoTerrain, reconstruct

    if samples < 1:
        raise ValueError("samples must be at least 1")
    G = gen_gstar()
    report = TheoremReport(samples=samples, seed=seed)
    report.persistent = is_persistent(G).persistent
    if not report.persistent:
        raise TheoremCheckFailed("G* is not persistent")
    rng = random.Random(seed)
    xs = list(X_list or [])
    while len(xs) < samples:
        xs.append(random_xvector(rng, 35))
    report.samples = len(xs)
    for X in xs:
        X = X if isinstance(X, XVector) else XVector(X)
        result = reconstruct(G, X)
        if not isinstance(result, NoTerrain) or not verify_farkas(result.system, result.certificate):
            raise TheoremCheckFailed("solver did not certify infeasibility", X)
        report.no_terrain += 1
        color = check_lemma_noX(X)
        report.colors[color] += 1
        z = padded_certificate(result.system, color, X)
        if not verify_farkas(result.system, z):
            raise TheoremCheckFailed(f"padded {COLOR_NAMES[color]} certificate rejected", X)
        report.padded_verified += 1
    return report
