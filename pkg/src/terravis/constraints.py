"""Linear constraints on terrain heights for a fixed graph and x-coordinates.

Every constraint involves three indices ``i < j < k`` and compares ``y_j``
with the height of the chord ``p_i p_k`` above ``x_j``:

* a *visibility* row ``d_jk*y_i - d_ik*y_j + d_ij*y_k >= eps`` keeps ``p_j``
  strictly under the chord of an edge ``{i, k}``;
* a *blocking* row (the negation of the left-hand side) forces the
  designated blocker ``p_j`` strictly over the chord of a non-edge.

The system is ``A y >= eps * 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .graph import LabeledGraph, PersistenceReport, is_persistent
from .numerics import RMatrix, as_rational, format_rational, parse_rational
from .terrain import XVector

VISIBILITY = "visibility"
BLOCKING = "blocking"
_KIND_ORDER = {VISIBILITY: 0, BLOCKING: 1}


class XPropertyBroken(ValueError):
    def __init__(self, i: int, k: int, j: int, j_prime: int):
        self.i, self.k, self.j, self.j_prime = i, k, j, j_prime
        super().__init__(
            f"non-edge ({i}, {k}) has blockers j={j} > j'={j_prime}; the X-property fails"
        )


class NotPersistent(ValueError):
    def __init__(self, report: PersistenceReport):
        self.report = report
        super().__init__("graph is not persistent: " + "; ".join(report.lines()))


@dataclass(frozen=True)
class BlockerPair:
    left: int
    right: int


@dataclass(frozen=True, order=True)
class RowTag:
    """Provenance of one row; ``side`` is ``left``, ``right`` or ``both`` for blocking rows."""

    kind: str
    i: int
    j: int
    k: int
    side: str | None = None

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.i, self.k, self.j)


@dataclass(frozen=True)
class ConstraintSystem:
    A: RMatrix
    epsilon: Fraction
    tags: tuple

    @property
    def m(self) -> int:
        return self.A.rows

    @property
    def n(self) -> int:
        return self.A.cols

    @property
    def b(self) -> tuple:
        return (self.epsilon,) * self.m

    def with_epsilon(self, epsilon) -> "ConstraintSystem":
        return ConstraintSystem(self.A, _positive(epsilon), self.tags)

    def subsystem(self, rows: Sequence[int]) -> "ConstraintSystem":
        rows = list(rows)
        A = RMatrix(len(rows), self.n, tuple(self.A.data[r] for r in rows))
        return ConstraintSystem(A, self.epsilon, tuple(self.tags[r] for r in rows))

    def find(self, kind: str, i: int, j: int, k: int) -> int:
        """Index of the row with the given kind and indices; ``KeyError`` if absent."""
        for r, tag in enumerate(self.tags):
            if (tag.kind, tag.i, tag.j, tag.k) == (kind, i, j, k):
                return r
        raise KeyError((kind, i, j, k))

    def row_string(self, r: int) -> str:
        t = self.tags[r]
        row = self.A.data[r]
        coefs = " ".join(format_rational(row[c]) for c in (t.i, t.j, t.k))
        return f"{t.kind} {t.i} {t.j} {t.k} : {coefs}"

    def to_text(self) -> str:
        lines = [f"{self.m} {self.n} {format_rational(self.epsilon)}"]
        lines += [self.row_string(r) for r in range(self.m)]
        return "\n".join(lines) + "\n"


def _positive(epsilon) -> Fraction:
    eps = as_rational(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    return eps


def _row(n: int, X: XVector, kind: str, i: int, j: int, k: int) -> tuple:
    sign = 1 if kind == VISIBILITY else -1
    row = [Fraction(0)] * n
    row[i] = sign * X.d(j, k)
    row[j] = -sign * X.d(i, k)
    row[k] = sign * X.d(i, j)
    return tuple(row)


def designated_blockers(G: LabeledGraph, i: int, k: int) -> BlockerPair:
    """Blockers for the non-edge ``{i, k}``.

    ``left`` is the first neighbour of ``i`` met walking left from ``k``;
    ``right`` is the first neighbour of ``k`` met walking right from ``i``.
    """
    if i > k:
        i, k = k, i
    if k < i + 2:
        raise ValueError(f"({i}, {k}) has no interior vertex")
    if G.has_edge(i, k):
        raise ValueError(f"({i}, {k}) is an edge")
    adj = G.adjacency
    j = next(v for v in range(k - 1, i, -1) if adj[i][v])
    j_prime = next(v for v in range(i + 1, k) if adj[v][k])
    if j > j_prime:
        raise XPropertyBroken(i, k, j, j_prime)
    return BlockerPair(j, j_prime)


def build_constraints(
    G: LabeledGraph, X: Sequence, epsilon=1, prune: bool = False
) -> ConstraintSystem:
    """All visibility rows for chords of ``G`` and blocker rows for its non-edges.

    With ``prune`` set, rows implied by at most two kept rows are dropped
    (see :func:`prune_redundant`).
    """
    X = X if isinstance(X, XVector) else XVector(X)
    eps = _positive(epsilon)
    n = G.n
    if len(X) != n:
        raise ValueError(f"graph has {n} vertices but X has {len(X)} entries")
    report = is_persistent(G)
    if not report.persistent:
        raise NotPersistent(report)

    tags = []
    for i, k in G.edges():
        for j in range(i + 1, k):
            tags.append(RowTag(VISIBILITY, i, j, k))
    for i, k in G.non_edges():
        pair = designated_blockers(G, i, k)
        if pair.left == pair.right:
            tags.append(RowTag(BLOCKING, i, pair.left, k, "both"))
        else:
            tags.append(RowTag(BLOCKING, i, pair.left, k, "left"))
            tags.append(RowTag(BLOCKING, i, pair.right, k, "right"))
    tags.sort(key=RowTag.sort_key)
    rows = tuple(_row(n, X, t.kind, t.i, t.j, t.k) for t in tags)
    system = ConstraintSystem(RMatrix(len(rows), n, rows), eps, tuple(tags))
    if prune:
        system = prune_redundant(system)
    return system


def _support(row) -> tuple:
    return tuple(c for c, v in enumerate(row) if v)


def _dominating_combination(target, r1, r2):
    """Return ``(a, b)`` with ``target = a*r1 + b*r2``, ``a, b >= 0``, ``a + b >= 1``, or None."""
    cols = [c for c in range(len(target)) if target[c] or r1[c] or r2[c]]
    # Pick two columns giving an invertible 2x2 system, then check the rest.
    for c1, c2 in combinations(cols, 2):
        det = r1[c1] * r2[c2] - r1[c2] * r2[c1]
        if det:
            a = (target[c1] * r2[c2] - target[c2] * r2[c1]) / det
            b = (r1[c1] * target[c2] - r1[c2] * target[c1]) / det
            break
    else:
        return None
    if a < 0 or b < 0 or a + b < 1:
        return None
    if all(target[c] == a * r1[c] + b * r2[c] for c in cols):
        return a, b
    return None


def _dominating_multiple(target, r1):
    sup = _support(target)
    if _support(r1) != sup:
        return None
    a = target[sup[0]] / r1[sup[0]]
    if a >= 1 and all(target[c] == a * r1[c] for c in sup):
        return a
    return None


def prune_redundant(system: ConstraintSystem, keep: Iterable[int] = ()) -> ConstraintSystem:
    """Drop rows that are nonnegative combinations of at most two kept rows.

    A row ``r = a*r1 + b*r2`` with ``a, b >= 0`` and ``a + b >= 1`` satisfies
    ``r.y >= (a + b)*eps >= eps`` whenever ``r1`` and ``r2`` hold, so removing
    it leaves the feasible set unchanged. Rows are examined from last to first
    and each is tested only against rows still kept, so every removal is
    justified by the final system (implication is transitive). Row indices
    in ``keep`` are never removed.
    """
    data = system.A.data
    m = system.m
    kept = set(range(m))
    supports = [frozenset(_support(row)) for row in data]
    by_col: dict[int, set] = {}
    for r in range(m):
        for c in supports[r]:
            by_col.setdefault(c, set()).add(r)

    protected = set(keep)
    for r in range(m - 1, -1, -1):
        if r in protected:
            continue
        target = data[r]
        sup = supports[r]
        candidates = set()
        for c in sup:
            candidates |= by_col[c] & kept
        candidates.discard(r)
        if _is_implied(target, sup, candidates, data, supports):
            kept.discard(r)
    return system.subsystem(sorted(kept))


def _is_implied(target, sup, candidates, data, supports) -> bool:
    # r1 and r2 must agree on the columns outside supp(target) so they cancel there.
    groups: dict[frozenset, list] = {}
    for q in candidates:
        extra = supports[q] - sup
        groups.setdefault(extra, []).append(q)
    for extra, qs in groups.items():
        if not extra:
            if any(supports[q] == sup and _dominating_multiple(target, data[q]) is not None for q in qs):
                return True
        for q1, q2 in combinations(qs, 2):
            if not sup <= supports[q1] | supports[q2]:
                continue
            if _dominating_combination(target, data[q1], data[q2]) is not None:
                return True
    return False


# Rows of the six-constraint system for the seven-vertex graph, as
# (kind, i, j, k) triples in display order.
GPRIME_CANONICAL_ROWS = (
    (BLOCKING, 0, 1, 2),
    (VISIBILITY, 0, 3, 4),
    (BLOCKING, 1, 3, 5),
    (VISIBILITY, 2, 3, 6),
    (VISIBILITY, 3, 5, 6),
    (BLOCKING, 4, 5, 6),
)


def gprime_canonical_system(X: Sequence, epsilon=1) -> ConstraintSystem:
    """The six constraints that decide realizability of the seven-vertex graph."""
    X = X if isinstance(X, XVector) else XVector(X)
    if len(X) != 7:
        raise ValueError(f"expected 7 x-coordinates, got {len(X)}")
    eps = _positive(epsilon)
    tags = tuple(
        RowTag(kind, i, j, k, "both" if kind == BLOCKING else None)
        for kind, i, j, k in GPRIME_CANONICAL_ROWS
    )
    rows = tuple(_row(7, X, t.kind, t.i, t.j, t.k) for t in tags)
    return ConstraintSystem(RMatrix(6, 7, rows), eps, tags)


def parse_system(text: str) -> ConstraintSystem:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    m, n, eps = lines[0].split()
    m, n = int(m), int(n)
    tags, rows = [], []
    for line in lines[1 : m + 1]:
        left, right = line.split(":")
        kind, i, j, k = left.split()
        i, j, k = int(i), int(j), int(k)
        coefs = [parse_rational(t) for t in right.split()]
        if kind not in _KIND_ORDER or len(coefs) != 3:
            raise ValueError(f"malformed row: {line!r}")
        row = [Fraction(0)] * n
        row[i], row[j], row[k] = coefs
        tags.append(RowTag(kind, i, j, k))
        rows.append(tuple(row))
    if len(rows) != m:
        raise ValueError(f"header announces {m} rows, found {len(rows)}")
    return ConstraintSystem(RMatrix(m, n, tuple(rows)), parse_rational(eps), tuple(tags))
