"""Exact rational scalars, vectors and dense matrices.

Scalars are :class:`fractions.Fraction`. Vectors are tuples of fractions and
matrices are :class:`RMatrix` instances holding a row-major tuple of rows.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
RVector = tuple

_RATIONAL_RE = re.compile(
    r"""^\s*
    (?P<sign>[-+]?)
    (?:
        (?P<num>\d+)\s*/\s*(?P<den>\d+)
      | (?P<int>\d+)(?:\.(?P<frac>\d*))?
      | \.(?P<frac2>\d+)
    )
    \s*$""",
    re.VERBOSE,
)


class RationalParseError(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse an integer, ``p/q`` or finite decimal into an exact fraction.

    Decimals are converted digit for digit, so ``"10.1"`` is ``101/10``.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise RationalParseError(f"not a rational number: {text!r}")
    sign = -1 if m.group("sign") == "-" else 1
    if m.group("num") is not None:
        den = int(m.group("den"))
        if den == 0:
            raise RationalParseError(f"zero denominator: {text!r}")
        return sign * Fraction(int(m.group("num")), den)
    if m.group("int") is not None:
        whole, frac = m.group("int"), m.group("frac") or ""
    else:
        whole, frac = "0", m.group("frac2")
    return sign * Fraction(int(whole + frac), 10 ** len(frac))


def format_rational(value: Fraction) -> str:
    """Canonical text form: ``p/q``, or ``p`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value) -> Fraction:
    """Coerce ints, fractions and strings to :class:`Fraction`.

    Floats are rejected; they would silently smuggle binary rounding into
    exact computations.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a string or Fraction")
    # numbers.Rational implementations (e.g. gmpy2.mpq)
    return Fraction(value.numerator, value.denominator)


def rvector(values: Iterable) -> tuple:
    return tuple(as_rational(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"length {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


@dataclass(frozen=True)
class RMatrix:
    """Dense rational matrix, stored row-major."""

    rows: int
    cols: int
    data: tuple

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise DimensionMismatch(f"expected {self.rows} rows, got {len(self.data)}")
        for r in self.data:
            if len(r) != self.cols:
                raise DimensionMismatch("all rows must have equal length")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> "RMatrix":
        data = tuple(rvector(r) for r in rows)
        if cols is None:
            if not data:
                raise ValueError("cols is required for an empty matrix")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n: int) -> "RMatrix":
        return cls.from_rows(([int(i == j) for j in range(n)] for i in range(n)), n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RMatrix":
        return cls.from_rows(([0] * cols for _ in range(rows)), cols)

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "RMatrix":
        return RMatrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def __str__(self):
        return "\n".join(" ".join(format_rational(v) for v in r) for r in self.data)


def mat_apply(A: RMatrix, x: Sequence, transpose: bool = False) -> tuple:
    """Exact product ``A x`` (or ``A^T x`` when ``transpose`` is set)."""
    x = rvector(x)
    if not transpose:
        if len(x) != A.cols:
            raise DimensionMismatch(f"matrix has {A.cols} columns, vector has {len(x)} entries")
        return tuple(dot(r, x) for r in A.data)
    if len(x) != A.rows:
        raise DimensionMismatch(f"matrix has {A.rows} rows, vector has {len(x)} entries")
    out = [Fraction(0)] * A.cols
    for r, xi in zip(A.data, x):
        if not xi:
            continue
        for j, a in enumerate(r):
            if a:
                out[j] += a * xi
    return tuple(out)


def vec_add(u: Sequence, v: Sequence) -> tuple:
    if len(u) != len(v):
        raise DimensionMismatch(f"length {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c, v: Sequence) -> tuple:
    c = as_rational(c)
    return tuple(c * a for a in v)


def format_vector(v: Sequence) -> str:
    return " ".join(format_rational(a) for a in v)


def parse_vector(text: str) -> tuple:
    return tuple(parse_rational(tok) for tok in text.split())
