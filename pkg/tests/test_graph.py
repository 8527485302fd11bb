import random

import pytest

from oracles import bar_violations_oracle, random_terrain, x_violations_oracle
from terravis.counterexamples import gen_gprime, gen_gstar
from terravis.graph import (
    GraphFormatError,
    LabeledGraph,
    check_bar_property,
    check_x_property,
    format_graph,
    is_persistent,
    parse_graph,
)
from terravis.terrain import Terrain, visibility_graph


def path_plus(n, extra):
    return LabeledGraph.from_edges(n, extra)


def test_path_edges_always_present():
    G = path_plus(4, [])
    assert all(G.has_edge(i, i + 1) for i in range(3))
    with pytest.raises(ValueError):
        LabeledGraph.from_matrix([[0, 0], [0, 0]])
    with pytest.raises(ValueError):
        LabeledGraph.from_matrix([[0, 1], [0, 0]])


def test_x_property_examples():
    assert check_x_property(path_plus(5, [(0, 3), (1, 4)])) == [(0, 1, 3, 4)]
    K5 = path_plus(5, [(i, k) for i in range(5) for k in range(i + 1, 5)])
    assert check_x_property(K5) == []
    assert check_x_property(path_plus(4, [])) == []


def test_bar_property_examples():
    assert check_bar_property(path_plus(5, [(0, 4)])) == [(0, 4)]
    assert check_bar_property(path_plus(3, [(0, 2)])) == []
    K4 = path_plus(4, [(0, 2), (0, 3), (1, 3)])
    assert check_bar_property(K4) == []


def test_report_lines():
    rep = is_persistent(path_plus(5, [(0, 4)]))
    assert not rep and list(rep.bar_violations) == [(0, 4)]
    assert rep.lines() == ["BAR-VIOLATION 0 4"]
    assert is_persistent(path_plus(3, [])).lines() == ["PERSISTENT"]


def random_graph(rng, n, p):
    return [(i, k) for i in range(n) for k in range(i + 2, n) if rng.random() < p]


def test_checks_match_independent_oracle():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(2, 10)
        edges = random_graph(rng, n, rng.random())
        G = LabeledGraph.from_edges(n, edges)
        assert check_x_property(G) == x_violations_oracle(n, edges)
        assert check_bar_property(G) == bar_violations_oracle(n, edges)


def test_known_graphs_persistent():
    assert is_persistent(gen_gprime()).persistent
    assert is_persistent(gen_gstar()).persistent


def test_terrain_graphs_persistent():
    rng = random.Random(8)
    for _ in range(150):
        pts = random_terrain(rng, rng.randint(2, 12))
        assert is_persistent(visibility_graph(Terrain.from_points(pts))).persistent


def test_removing_chords_never_crashes():
    G = gen_gprime()
    for i, k in G.chords():
        H = G.without_edge(i, k)
        assert not H.has_edge(i, k)
        is_persistent(H)
    with pytest.raises(ValueError):
        G.without_edge(2, 3)


def test_graph_file_formats():
    G = parse_graph("# sample\n4\n0 2\n0 1\n")
    assert G.edges() == [(0, 1), (0, 2), (1, 2), (2, 3)]
    assert format_graph(G) == "4\n0 2\n"
    assert format_graph(G, include_path=True) == "4\n0 1\n0 2\n1 2\n2 3\n"
    assert parse_graph(format_graph(G)) == G
    M = parse_graph("matrix\n0 1 1 0\n1 0 1 0\n1 1 0 1\n0 0 1 0\n")
    assert M == G
    for g in (gen_gprime(), gen_gstar()):
        assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize(
    "text",
    ["", "x\n", "3\n0 3\n", "3\n1 1\n", "3\n0\n", "matrix\n0 1\n1 0 1\n", "matrix\n0 2\n2 0\n", "matrix\n0 1\n0 0\n"],
)
def test_graph_file_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)
