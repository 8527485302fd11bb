"""Labeled graphs with a Hamiltonian path, and the persistence checks.

A labeled graph on ``n`` vertices always contains the path edges
``{i, i+1}``. A graph is persistent when it has both the X-property and the
Bar-property; the checkers below return every violation, sorted, so that an
empty result means the property holds.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator


class GraphError(ValueError):
    pass


class GraphFormatError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass(frozen=True)
class LabeledGraph:
    """Undirected simple graph whose vertex order encodes the path ``0-1-...-(n-1)``.

    ``adjacency`` is a symmetric tuple-of-tuples of bools with a false
    diagonal. Use :meth:`from_edges` to build one from an edge list.
    """

    n: int
    adjacency: tuple = field(repr=False)

    def __post_init__(self):
        adj = self.adjacency
        if self.n < 1 or len(adj) != self.n or any(len(r) != self.n for r in adj):
            raise GraphError("adjacency must be an n x n matrix")
        for i in range(self.n):
            if adj[i][i]:
                raise GraphError(f"self-loop at vertex {i}")
            for k in range(i + 1, self.n):
                if adj[i][k] != adj[k][i]:
                    raise GraphError(f"adjacency not symmetric at ({i}, {k})")
        for i in range(self.n - 1):
            if not adj[i][i + 1]:
                raise GraphError(f"missing Hamiltonian path edge ({i}, {i + 1})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "LabeledGraph":
        """Build a graph from ``edges``; path edges are added implicitly."""
        adj = [[False] * n for _ in range(n)]
        for i in range(n - 1):
            adj[i][i + 1] = adj[i + 1][i] = True
        for i, k in edges:
            if not (0 <= i < n and 0 <= k < n):
                raise GraphError(f"edge ({i}, {k}) out of range for n={n}")
            if i == k:
                raise GraphError(f"self-loop at vertex {i}")
            adj[i][k] = adj[k][i] = True
        return cls(n, tuple(tuple(r) for r in adj))

    @classmethod
    def from_matrix(cls, rows: Iterable[Iterable]) -> "LabeledGraph":
        adj = tuple(tuple(bool(v) for v in r) for r in rows)
        return cls(len(adj), adj)

    def has_edge(self, i: int, k: int) -> bool:
        return self.adjacency[i][k]

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(i, k)`` with ``i < k``, in lexicographic order."""
        return [(i, k) for i, k in combinations(range(self.n), 2) if self.adjacency[i][k]]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(i, k) for i, k in combinations(range(self.n), 2) if not self.adjacency[i][k]]

    def chords(self) -> list[tuple[int, int]]:
        """Edges that are not on the Hamiltonian path."""
        return [(i, k) for i, k in self.edges() if k > i + 1]

    def degree(self, v: int) -> int:
        return sum(self.adjacency[v])

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.adjacency[v][u]]

    def induced(self, vertices: Iterable[int]) -> "LabeledGraph":
        """Induced subgraph, relabelled by the order of ``vertices``."""
        vs = list(vertices)
        adj = tuple(tuple(self.adjacency[a][b] for b in vs) for a in vs)
        return LabeledGraph(len(vs), adj)

    def symmetric_difference(self, other: "LabeledGraph") -> list[tuple[int, int]]:
        if other.n != self.n:
            raise GraphError("graphs have different vertex counts")
        return [
            (i, k)
            for i, k in combinations(range(self.n), 2)
            if self.adjacency[i][k] != other.adjacency[i][k]
        ]

    def without_edge(self, i: int, k: int) -> "LabeledGraph":
        if abs(i - k) == 1:
            raise GraphError("path edges cannot be removed")
        adj = [list(r) for r in self.adjacency]
        adj[i][k] = adj[k][i] = False
        return LabeledGraph(self.n, tuple(tuple(r) for r in adj))

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))


# -- persistence ------------------------------------------------------------

@dataclass(frozen=True)
class PersistenceReport:
    x_violations: tuple
    bar_violations: tuple

    @property
    def persistent(self) -> bool:
        return not self.x_violations and not self.bar_violations

    def __bool__(self):
        return self.persistent

    def lines(self) -> list[str]:
        if self.persistent:
            return ["PERSISTENT"]
        out = ["X-VIOLATION %d %d %d %d" % q for q in self.x_violations]
        out += ["BAR-VIOLATION %d %d" % p for p in self.bar_violations]
        return out


def check_x_property(G: LabeledGraph) -> list[tuple[int, int, int, int]]:
    """Quadruples ``a<b<c<d`` with ``{a,c}``, ``{b,d}`` edges but ``{a,d}`` missing."""
    adj = G.adjacency
    n = G.n
    out = []
    for a in range(n):
        ra = adj[a]
        for b in range(a + 1, n):
            rb = adj[b]
            for c in range(b + 1, n):
                if not ra[c]:
                    continue
                for d in range(c + 1, n):
                    if rb[d] and not ra[d]:
                        out.append((a, b, c, d))
    return out


def check_bar_property(G: LabeledGraph) -> list[tuple[int, int]]:
    """Edges ``{i,k}``, ``k >= i+2``, with no ``j`` in between adjacent to both."""
    adj = G.adjacency
    out = []
    for i in range(G.n):
        for k in range(i + 2, G.n):
            if adj[i][k] and not any(adj[i][j] and adj[j][k] for j in range(i + 1, k)):
                out.append((i, k))
    return out


def is_persistent(G: LabeledGraph) -> PersistenceReport:
    return PersistenceReport(tuple(check_x_property(G)), tuple(check_bar_property(G)))


# -- file format ------------------------------------------------------------

def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_graph(text: str) -> LabeledGraph:
    """Read the edge-list form (``n`` then ``i j`` lines) or the ``matrix`` form."""
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFormatError("empty graph file")
    lineno, head = lines[0]
    tokens = head.split()
    if tokens[0] == "matrix":
        rows = []
        for ln, line in lines[1:]:
            row = line.split()
            if any(tok not in ("0", "1") for tok in row):
                raise GraphFormatError("matrix entries must be 0 or 1", ln)
            rows.append([tok == "1" for tok in row])
        if len(tokens) == 2 and tokens[1].isdigit() and int(tokens[1]) != len(rows):
            raise GraphFormatError(f"header says {tokens[1]} rows, found {len(rows)}", lineno)
        try:
            return LabeledGraph.from_matrix(rows)
        except GraphError as exc:
            raise GraphFormatError(str(exc)) from exc
    if len(tokens) != 1 or not tokens[0].isdigit() or int(tokens[0]) < 1:
        raise GraphFormatError("first line must be the vertex count", lineno)
    n = int(tokens[0])
    edges = []
    for ln, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFormatError("edge lines must be two vertex indices", ln)
        i, k = int(parts[0]), int(parts[1])
        if i >= n or k >= n or i == k:
            raise GraphFormatError(f"bad edge ({i}, {k}) for n={n}", ln)
        edges.append((i, k))
    return LabeledGraph.from_edges(n, edges)


def format_graph(G: LabeledGraph, include_path: bool = False) -> str:
    """Edge-list form; the implied path edges are omitted unless ``include_path``."""
    pairs = G.edges() if include_path else G.chords()
    lines = [str(G.n)] + [f"{i} {k}" for i, k in pairs]
    return "\n".join(lines) + "\n"


def read_graph(path) -> LabeledGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())
