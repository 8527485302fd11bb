"""Exact feasibility of ``A y >= b`` with ``y`` free.

Farkas' lemma for free variables: exactly one of

* some ``y`` satisfies ``A y >= b``;
* some ``z <= 0`` has ``A^T z = 0`` and ``b^T z < 0``.

:func:`solve_feasibility` runs a phase-1 simplex (integer fraction-free
pivoting, Dantzig pricing with a lexicographic ratio test, or Bland's rule
on request) on the certificate side
``{w >= 0 : A^T w = 0, b^T w = 1}``. A zero phase-1 optimum yields the
certificate ``z = -w``; a positive optimum yields a feasible ``y`` from the
final dual prices. Either answer is re-checked by the independent verifiers
before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .numerics import (
    DimensionMismatch,
    RMatrix,
    as_rational,
    dot,
    format_vector,
    mat_apply,
    parse_vector,
)


@dataclass(frozen=True)
class Feasible:
    y: tuple

    feasible = True

    def to_text(self) -> str:
        return "FEASIBLE\n" + format_vector(self.y) + "\n"


@dataclass(frozen=True)
class Infeasible:
    z: tuple

    feasible = False

    def to_text(self) -> str:
        return "INFEASIBLE\n" + format_vector(self.z) + "\n"


FeasibilityOutcome = Feasible | Infeasible


def parse_outcome(text: str) -> FeasibilityOutcome:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2 or lines[0] not in ("FEASIBLE", "INFEASIBLE"):
        raise ValueError("outcome must be FEASIBLE or INFEASIBLE followed by one vector line")
    vec = parse_vector(lines[1])
    return Feasible(vec) if lines[0] == "FEASIBLE" else Infeasible(vec)


def _system_parts(S) -> tuple[RMatrix, tuple]:
    """Accept a ConstraintSystem or an ``(A, b)`` pair."""
    if isinstance(S, tuple):
        A, b = S
        return A, tuple(as_rational(v) for v in b)
    return S.A, S.b


# -- verifiers --------------------------------------------------------------

def verify_feasible(S, y: Sequence) -> bool:
    """``A y >= b`` entrywise, in exact arithmetic."""
    A, b = _system_parts(S)
    if len(y) != A.cols:
        raise DimensionMismatch(f"y has {len(y)} entries, system has {A.cols} variables")
    return all(lhs >= rhs for lhs, rhs in zip(mat_apply(A, y), b))


def verify_farkas(S, z: Sequence) -> bool:
    """``z <= 0``, ``A^T z >= 0``, ``b^T z < 0``, and ``A^T z = 0``.

    Because ``y`` is unrestricted in sign, a certificate must annihilate the
    columns: ``A^T z >= 0`` with a nonzero entry does not rule out every
    ``y``. For terrain systems the rows annihilate constant vectors, so the
    two conditions coincide there.
    """
    A, b = _system_parts(S)
    if len(z) != A.rows:
        raise DimensionMismatch(f"z has {len(z)} entries, system has {A.rows} rows")
    z = tuple(as_rational(v) for v in z)
    if any(v > 0 for v in z):
        return False
    if any(v != 0 for v in mat_apply(A, z, transpose=True)):
        return False
    return dot(b, z) < 0


# -- fraction-free phase-1 simplex ------------------------------------------

class _Phase1:
    """Revised simplex for ``min 1^T a  s.t.  M w + a = rhs,  w, a >= 0``.

    Only ``D * [B^-1 | B^-1 rhs]`` is stored, as integers, with ``D`` the
    basis determinant; pivots use Bareiss-style exact division. Columns of
    ``M`` are kept sparse, so pricing costs one short dot product per column.
    """

    def __init__(self, columns: list[list[tuple[int, int]]], rhs: list[int]):
        self.R = R = len(rhs)
        self.m = len(columns)
        self.columns = columns
        self.T = [[int(e == c) for c in range(R)] + [rhs[e]] for e in range(R)]
        self.D = 1
        self.basis = [self.m + e for e in range(R)]
        self.pivots = 0

    def _column(self, j: int) -> list[int]:
        """``D * B^-1 * (column j)``."""
        T = self.T
        if j >= self.m:
            e = j - self.m
            return [row[e] for row in T]
        col = self.columns[j]
        return [sum(row[e] * v for e, v in col) for row in T]

    def _prices(self) -> list[int]:
        pi = [0] * self.R
        for e, var in enumerate(self.basis):
            if var >= self.m:
                row = self.T[e]
                for c in range(self.R):
                    pi[c] += row[c]
        return pi

    def _entering(self, bland: bool) -> int | None:
        """Entering column, or None when no reduced cost is negative.

        Dantzig's rule (most negative reduced cost), or with ``bland`` the
        lowest-index candidate.
        """
        R, m, D = self.R, self.m, self.D
        pi = self._prices()
        in_basis = set(self.basis)
        best, best_val = None, 0
        for j, col in enumerate(self.columns):
            if j in in_basis:
                continue
            v = sum(pi[e] * c for e, c in col)
            if v > best_val:
                if bland:
                    return j
                best, best_val = j, v
        for e in range(R):
            v = pi[e] - D
            if m + e not in in_basis and v > best_val:
                if bland:
                    return m + e
                best, best_val = m + e, v
        return best

    def run(self, rule: str = "lex") -> None:
        """Pivot to optimality.

        ``rule="lex"``: Dantzig pricing with the lexicographic ratio test;
        ``rule="bland"``: Bland's smallest-index rule. Both rule out cycling.
        """
        if rule not in ("lex", "bland"):
            raise ValueError(f"unknown pivot rule {rule!r}")
        bland = rule == "bland"
        R = self.R
        while True:
            s = self._entering(bland)
            if s is None:
                return
            alpha = self._column(s)
            T = self.T
            r = None
            for e in range(R):
                a = alpha[e]
                if a <= 0:
                    continue
                if r is None:
                    r = e
                elif bland:
                    lhs, cur = T[e][R] * alpha[r], T[r][R] * a
                    if lhs < cur or (lhs == cur and self.basis[e] < self.basis[r]):
                        r = e
                elif self._lex_less(T[e], a, T[r], alpha[r]):
                    r = e
            if r is None:  # cannot happen: the phase-1 objective is bounded below
                raise RuntimeError("unbounded phase-1 problem")
            self._pivot(r, s, alpha)

    def _lex_less(self, row_e, a_e, row_r, a_r) -> bool:
        """``(rhs, B^-1 row)_e / a_e`` lexicographically below the same for ``r``."""
        R = self.R
        lhs, cur = row_e[R] * a_r, row_r[R] * a_e
        if lhs != cur:
            return lhs < cur
        for c in range(R):
            lhs, cur = row_e[c] * a_r, row_r[c] * a_e
            if lhs != cur:
                return lhs < cur
        return False

    def _pivot(self, r: int, s: int, alpha: list[int]) -> None:
        T, D = self.T, self.D
        prow = T[r]
        p = alpha[r]
        for e in range(self.R):
            if e == r:
                continue
            f = alpha[e]
            row = T[e]
            if f:
                T[e] = [(a * p - f * b) // D for a, b in zip(row, prow)]
            elif p != D:
                T[e] = [a * p // D for a in row]
        self.D = p
        self.basis[r] = s
        self.pivots += 1

    def optimum(self) -> Fraction:
        total = sum(self.T[e][self.R] for e, var in enumerate(self.basis) if var >= self.m)
        return Fraction(total, self.D)

    def primal(self) -> list[Fraction]:
        w = [Fraction(0)] * self.m
        for e, var in enumerate(self.basis):
            if var < self.m:
                w[var] = Fraction(self.T[e][self.R], self.D)
        return w

    def duals(self) -> list[Fraction]:
        """Simplex multipliers ``c_B^T B^-1``."""
        pi = [0] * self.R
        for e, var in enumerate(self.basis):
            if var >= self.m:
                for c in range(self.R):
                    pi[c] += self.T[e][c]
        return [Fraction(v, self.D) for v in pi]


def _primitive(values: Sequence[Fraction]) -> tuple:
    """Positive rescaling to coprime integers (zero vector unchanged)."""
    den = 1
    for v in values:
        den = lcm(den, v.denominator)
    ints = [int(v * den) for v in values]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return tuple(Fraction(0) for _ in values)
    return tuple(Fraction(v // g) for v in ints)


def _integer_rows(A: RMatrix, b: Sequence) -> tuple[list, list]:
    """Sparse integer rows ``(col, value)`` and right-hand sides of ``L*A``, ``L*b``."""
    L = 1
    for row in A.data:
        for v in row:
            if v.denominator != 1:
                L = lcm(L, v.denominator)
    for v in b:
        if v.denominator != 1:
            L = lcm(L, v.denominator)
    rows = [[(j, int(v * L)) for j, v in enumerate(row) if v] for row in A.data]
    return rows, [int(v * L) for v in b]


def _solve_int(rows: list, b: list, n: int, rule: str = "lex") -> tuple[bool, list]:
    """Core solve on integer data: ``(True, y)`` or ``(False, w)`` with ``w >= 0``."""
    # Equation j <  n: sum_i A[i][j] w_i = 0
    # Equation j == n: sum_i b_i w_i = 1
    columns = []
    for row, bi in zip(rows, b):
        col = list(row)
        if bi:
            col.append((n, bi))
        columns.append(col)
    tab = _Phase1(columns, [0] * n + [1])
    tab.run(rule)
    if tab.optimum() == 0:
        return False, tab.primal()
    pi = tab.duals()
    t = pi[n]
    return True, [-pi[j] / t for j in range(n)]


def solve_feasibility(S, rule: str = "lex") -> FeasibilityOutcome:
    """Exact feasibility verdict for a :class:`ConstraintSystem` (or an ``(A, b)`` pair).

    The answer is checked with :func:`verify_feasible` or
    :func:`verify_farkas` before it is returned.
    """
    A, b = _system_parts(S)
    if len(b) != A.rows:
        raise DimensionMismatch(f"A has {A.rows} rows but b has {len(b)} entries")
    rows, b_int = _integer_rows(A, b)
    feasible, vec = _solve_int(rows, b_int, A.cols, rule)
    if feasible:
        out = Feasible(tuple(vec))
        ok = verify_feasible((A, b), out.y)
    else:
        out = Infeasible(_primitive([-w for w in vec]))
        ok = verify_farkas((A, b), out.z)
    if not ok:
        raise RuntimeError("solver produced an answer that failed exact verification")
    return out
