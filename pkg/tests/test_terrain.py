from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import random_terrain, sees_oracle, vg_oracle
from terravis.graph import is_persistent
from terravis.terrain import (
    MonotonicityViolation,
    Terrain,
    TerrainParseError,
    XVector,
    format_terrain,
    parse_terrain,
    parse_xvector,
    sees,
    terrain_new,
    visibility_graph,
)


def edge_set(G):
    return set(G.edges())


def test_terrain_new_validation():
    assert terrain_new([(0, 0), (1, 5)]).n == 2
    with pytest.raises(MonotonicityViolation) as info:
        terrain_new([(0, 0), (0, 1)])
    assert info.value.index == 0
    with pytest.raises(MonotonicityViolation) as info:
        terrain_new([(0, 0), (2, 1), (1, 0)])
    assert info.value.index == 1


def test_xvector_distances():
    X = XVector(["0", "10", "10.1"])
    assert X.d(1, 2) == Fraction(1, 10)
    assert X.d(0, 2) == X.d(0, 1) + X.d(1, 2)
    with pytest.raises(MonotonicityViolation):
        XVector([0, 2, 2])


def test_sees_examples():
    peak = terrain_new([(0, 0), (1, 1), (2, 0)])
    valley = terrain_new([(0, 0), (1, -1), (2, 0)])
    assert not sees(peak, 0, 2)
    assert sees(valley, 0, 2)
    assert sees(valley, 2, 0)
    for i in range(2):
        assert sees(peak, i, i + 1)


def test_point_on_chord_blocks():
    T = terrain_new([(0, 0), (1, 1), (2, 2)])
    assert not sees(T, 0, 2)
    assert edge_set(visibility_graph(T)) == {(0, 1), (1, 2)}


def test_sees_bad_indices():
    T = terrain_new([(0, 0), (1, 1), (2, 0)])
    with pytest.raises((IndexError, ValueError)):
        sees(T, 0, 3)
    with pytest.raises((IndexError, ValueError)):
        sees(T, 1, 1)


@pytest.mark.parametrize(
    "points, edges",
    [
        ([(0, 0), (1, 1), (2, 0)], {(0, 1), (1, 2)}),
        ([(0, 0), (1, 2), (2, 0), (3, 2)], {(0, 1), (1, 2), (2, 3), (1, 3)}),
        ([(0, 0), (1, 3)], {(0, 1)}),
    ],
)
def test_vg_examples(points, edges):
    assert edge_set(visibility_graph(terrain_new(points))) == edges


def test_convex_chain_is_complete():
    T = terrain_new([(0, 0), (1, -3), (2, -4), (3, -3), (4, 0)])
    G = visibility_graph(T)
    assert len(G.edges()) == 10


def test_sweep_matches_brute_force():
    rng = random.Random(7)
    for _ in range(400):
        pts = random_terrain(rng, rng.randint(2, 11))
        T = Terrain.from_points(pts)
        G = visibility_graph(T)
        assert edge_set(G) == vg_oracle(pts)
        i, k = sorted(rng.sample(range(len(pts)), 2))
        assert sees(T, i, k) == sees_oracle(pts, i, k) == sees(T, k, i)


def test_collinear_heavy_terrains():
    # integer grids produce many exactly-on-chord cases
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(3, 9)
        pts = [(x, rng.randint(-2, 2)) for x in range(n)]
        assert edge_set(visibility_graph(Terrain.from_points(pts))) == vg_oracle(pts)


def test_vg_is_persistent_on_random_terrains():
    rng = random.Random(3)
    for _ in range(200):
        pts = random_terrain(rng, rng.randint(2, 12))
        assert is_persistent(visibility_graph(Terrain.from_points(pts))).persistent


coords = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.tuples(st.fractions(min_value=Fraction(1, 4), max_value=5, max_denominator=8), coords), min_size=2, max_size=9),
    st.fractions(min_value=Fraction(1, 10), max_value=20, max_denominator=10),
    coords,
    coords,
)
def test_affine_invariance(steps, a, b, c):
    x, pts = Fraction(0), []
    for dx, y in steps:
        x += dx
        pts.append((x, y))
    G = visibility_graph(Terrain.from_points(pts))
    moved = [(a * px + b, a * py + c) for px, py in pts]
    assert visibility_graph(Terrain.from_points(moved)) == G


def test_parse_terrain_file():
    T = parse_terrain("# peak\n0 0\n1.5 1/2  # top\n\n3 0\n")
    assert T.points == ((0, 0), (Fraction(3, 2), Fraction(1, 2)), (3, 0))
    assert parse_terrain(format_terrain(T)) == T


def test_parse_terrain_errors():
    with pytest.raises(MonotonicityViolation) as info:
        parse_terrain("0 0\n# c\n1 1\n1 0\n")
    assert info.value.line == 4
    with pytest.raises(TerrainParseError):
        parse_terrain("0 0\n1\n")
    with pytest.raises(TerrainParseError):
        parse_terrain("0 0\n1 x\n")
    with pytest.raises(TerrainParseError):
        parse_terrain("0 0\n")


def test_parse_xvector():
    assert parse_xvector("0 10\n10.1 # c\n") == (0, 10, Fraction(101, 10))
