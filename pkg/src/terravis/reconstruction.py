"""Terrain reconstruction from a persistent graph and fixed x-coordinates."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .constraints import ConstraintSystem, build_constraints
from .graph import LabeledGraph
from .lp import solve_feasibility, verify_farkas
from .numerics import mat_apply
from .terrain import Terrain, XVector, visibility_graph


class VGMismatch(RuntimeError):
    """The terrain built from a feasible point does not have the requested graph."""

    def __init__(self, expected: LabeledGraph, got: LabeledGraph):
        self.expected = expected
        self.got = got
        self.difference = expected.symmetric_difference(got)
        super().__init__(f"reconstructed terrain differs from the graph on pairs {self.difference}")


@dataclass(frozen=True)
class Reconstructed:
    terrain: Terrain
    slack: Fraction
    system: ConstraintSystem

    ok = True


@dataclass(frozen=True)
class NoTerrain:
    certificate: tuple
    system: ConstraintSystem

    ok = False


ReconstructionResult = Reconstructed | NoTerrain


def reconstruct(
    G: LabeledGraph, X: Sequence, epsilon=1, prune: bool = False
) -> ReconstructionResult:
    """Find heights over ``X`` whose terrain has visibility graph ``G``, or prove none exist.

    Raises :class:`~terravis.constraints.NotPersistent` for non-persistent
    input and :class:`VGMismatch` if the recomputed graph disagrees with ``G``.
    ``slack`` is the smallest value of ``A y - eps`` over the rows.
    """
    X = X if isinstance(X, XVector) else XVector(X)
    system = build_constraints(G, X, epsilon, prune=prune)
    outcome = solve_feasibility(system)
    if not outcome.feasible:
        if not verify_farkas(system, outcome.z):
            raise RuntimeError("certificate failed verification")
        return NoTerrain(outcome.z, system)
    T = Terrain.from_xy(X, outcome.y)
    got = visibility_graph(T)
    if got != G:
        raise VGMismatch(G, got)
    values = mat_apply(system.A, outcome.y)
    slack = min((v - system.epsilon for v in values), default=Fraction(0))
    return Reconstructed(T, slack, system)


def roundtrip_check(T: Terrain) -> bool:
    """Rebuild ``T``'s visibility graph from its own x-coordinates."""
    G = visibility_graph(T)
    try:
        result = reconstruct(G, T.xs)
    except VGMismatch:
        return False
    return isinstance(result, Reconstructed) and visibility_graph(result.terrain) == G
