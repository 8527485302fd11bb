from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from terravis.numerics import (
    DimensionMismatch,
    RMatrix,
    RationalParseError,
    as_rational,
    format_rational,
    mat_apply,
    parse_rational,
    parse_vector,
    vec_add,
)

rationals = st.fractions(max_denominator=10**6)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3/6", Fraction(1, 2)),
        ("10.1", Fraction(101, 10)),
        ("-0", Fraction(0)),
        ("+7", Fraction(7)),
        ("-.25", Fraction(-1, 4)),
        ("12.", Fraction(12)),
        ("-8/2", Fraction(-4)),
    ],
)
def test_parse_examples(text, expected):
    value = parse_rational(text)
    assert value == expected
    assert value.denominator > 0


def test_decimal_is_exact_not_binary():
    assert parse_rational("0.1") * 3 == parse_rational("0.3")
    assert parse_rational("0.1") != Fraction(0.1)


@pytest.mark.parametrize("bad", ["", "1/0", "abc", "1e5", "1/2/3", "0x10", "1.2.3", "--1"])
def test_parse_rejects(bad):
    with pytest.raises(RationalParseError):
        parse_rational(bad)


def test_signed_zero_formats_plainly():
    assert format_rational(parse_rational("-0")) == "0"
    assert format_rational(Fraction(-6, 4)) == "-3/2"


@given(rationals, rationals)
def test_roundtrip_and_field_laws(a, b):
    assert parse_rational(format_rational(a)) == a
    assert a + b - b == a
    if b != 0:
        assert (a * b) / b == a


def test_floats_refused():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)
    assert as_rational("2/4") == Fraction(1, 2)


def test_mat_apply_examples():
    assert mat_apply(RMatrix.identity(3), (1, 2, 3)) == (1, 2, 3)
    assert mat_apply(RMatrix.zeros(2, 3), (5, -1, 7)) == (0, 0)
    A = RMatrix.from_rows([[1, -1]])
    assert mat_apply(A, (Fraction(5, 2), Fraction(1, 2))) == (2,)


def test_mat_apply_dimension_checks():
    A = RMatrix.from_rows([[1, 2], [3, 4], [5, 6]])
    with pytest.raises(DimensionMismatch):
        mat_apply(A, (1, 2, 3))
    assert mat_apply(A, (1, 0, -1), transpose=True) == (-4, -4)
    with pytest.raises(ValueError):
        RMatrix.from_rows([[1, 2], [3]])


@given(
    st.integers(1, 4).flatmap(
        lambda c: st.tuples(
            st.lists(st.lists(rationals, min_size=c, max_size=c), min_size=1, max_size=4),
            st.lists(rationals, min_size=c, max_size=c),
            st.lists(rationals, min_size=c, max_size=c),
        )
    )
)
def test_mat_apply_is_linear(data):
    rows, x, y = data
    A = RMatrix.from_rows(rows)
    assert mat_apply(A, vec_add(x, y)) == vec_add(mat_apply(A, x), mat_apply(A, y))


def test_transpose_and_empty():
    A = RMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert A.transpose().transpose() == A
    assert A.transpose().row(2) == (3, 6)
    E = RMatrix.zeros(0, 3)
    assert E.transpose().rows == 3 and E.transpose().cols == 0


def test_parse_vector():
    assert parse_vector("1 -2/4 0.5") == (1, Fraction(-1, 2), Fraction(1, 2))
