"""Terrains, the visibility predicate and visibility graphs.

Two terrain points see each other when every point strictly between them
lies strictly below the chord joining them; a point exactly on the chord
blocks the view.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import LabeledGraph
from .numerics import RationalParseError, as_rational, format_rational, parse_rational


class MonotonicityViolation(ValueError):
    """Raised when ``x[index] >= x[index + 1]``."""

    def __init__(self, index: int, line: int | None = None):
        self.index = index
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"x-coordinates not strictly increasing at index {index}{where}")


class TerrainParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class XVector(tuple):
    """Strictly increasing tuple of exact x-coordinates."""

    def __new__(cls, xs: Iterable):
        values = tuple(as_rational(x) for x in xs)
        for i in range(len(values) - 1):
            if values[i] >= values[i + 1]:
                raise MonotonicityViolation(i)
        return super().__new__(cls, values)

    def d(self, i: int, j: int) -> Fraction:
        """Horizontal distance ``|x_i - x_j|``."""
        return abs(self[i] - self[j])

    def project(self, indices: Sequence[int]) -> "XVector":
        return XVector(self[i] for i in indices)


@dataclass(frozen=True)
class Terrain:
    points: tuple

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValueError("a terrain needs at least two points")
        for i in range(len(self.points) - 1):
            if self.points[i][0] >= self.points[i + 1][0]:
                raise MonotonicityViolation(i)

    @classmethod
    def from_points(cls, points: Iterable[Sequence]) -> "Terrain":
        return cls(tuple((as_rational(x), as_rational(y)) for x, y in points))

    @classmethod
    def from_xy(cls, xs: Sequence, ys: Sequence) -> "Terrain":
        if len(xs) != len(ys):
            raise ValueError(f"{len(xs)} x-coordinates but {len(ys)} y-coordinates")
        return cls.from_points(zip(xs, ys))

    def __len__(self):
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def xs(self) -> XVector:
        return XVector(p[0] for p in self.points)

    @property
    def ys(self) -> tuple:
        return tuple(p[1] for p in self.points)


def terrain_new(points) -> Terrain:
    return Terrain.from_points(points)


def sees(T: Terrain, i: int, k: int) -> bool:
    """True iff ``p_i`` and ``p_k`` see each other over ``T``; argument order is irrelevant."""
    n = T.n
    if not (0 <= i < n and 0 <= k < n):
        raise IndexError(f"indices ({i}, {k}) out of range for a {n}-point terrain")
    if i == k:
        raise ValueError(f"a point is not paired with itself ({i})")
    if i > k:
        i, k = k, i
    pts = T.points
    xi, yi = pts[i]
    xk, yk = pts[k]
    dik = xk - xi
    for j in range(i + 1, k):
        xj, yj = pts[j]
        # p_j strictly below the chord:  d_ik * y_j < d_jk * y_i + d_ij * y_k
        if dik * yj >= (xk - xj) * yi + (xj - xi) * yk:
            return False
    return True


def visibility_graph(T: Terrain) -> LabeledGraph:
    """Visibility graph via a left-to-right sweep from every vertex.

    From ``p_i``, ``p_k`` is visible iff the slope ``p_i -> p_k`` strictly
    exceeds every slope ``p_i -> p_j`` for ``i < j < k``. This is equivalent
    to :func:`sees` and runs in ``O(n^2)``.
    """
    n = T.n
    pts = T.points
    edges = []
    for i in range(n - 1):
        xi, yi = pts[i]
        best = None
        for k in range(i + 1, n):
            xk, yk = pts[k]
            slope = (yk - yi) / (xk - xi)
            if best is None or slope > best:
                edges.append((i, k))
                best = slope
    return LabeledGraph.from_edges(n, edges)


# -- file format ------------------------------------------------------------

def parse_terrain(text: str) -> Terrain:
    """One ``x y`` pair per line, rational syntax, ``#`` starts a comment."""
    points, lines = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise TerrainParseError("expected 'x y'", lineno)
        try:
            points.append((parse_rational(parts[0]), parse_rational(parts[1])))
        except RationalParseError as exc:
            raise TerrainParseError(str(exc), lineno) from exc
        lines.append(lineno)
    if len(points) < 2:
        raise TerrainParseError("a terrain needs at least two points")
    try:
        return Terrain(tuple(points))
    except MonotonicityViolation as exc:
        raise MonotonicityViolation(exc.index, lines[exc.index + 1]) from None


def format_terrain(T: Terrain) -> str:
    return "".join(f"{format_rational(x)} {format_rational(y)}\n" for x, y in T.points)


def read_terrain(path) -> Terrain:
    with open(path, encoding="utf-8") as fh:
        return parse_terrain(fh.read())


def parse_xvector(text: str) -> XVector:
    """X-coordinate file: rationals separated by whitespace or newlines."""
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for tok in line.split():
            try:
                values.append(parse_rational(tok))
            except RationalParseError as exc:
                raise TerrainParseError(str(exc), lineno) from exc
    return XVector(values)


def format_xvector(X: Sequence) -> str:
    return " ".join(format_rational(x) for x in X) + "\n"
