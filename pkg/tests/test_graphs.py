import random
from fractions import Fraction

import networkx as nx
import pytest

from helpers import random_connected_graph, random_graph
from qclifford.errors import DisconnectedGraphError, GraphFormatError
from qclifford.gf2core import QType, QuadClass, classify_quadratic
from qclifford.graphs import (BEINEKE_GRAPHS, Color, ColoredGraph, beineke_check, build_space,
                              family, find_minus_type_6_subgraph, is_isomorphic, line_graph_adj,
                              line_graph_root, parse_graph, reduce_graph)


def nx_graph(g: ColoredGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def path_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


# -- parsing ------------------------------------------------------------------------

def test_parse_basic():
    g = parse_graph("vertex a black 1\nvertex b black 1\nedge a b")
    assert g.names == ("a", "b") and g.all_black() and g.adjacent(0, 1)


def test_parse_white_label_and_comments():
    g = parse_graph("# header\nvertex a white -1  # trailing\nvertex b black 3/4\n")
    assert g.color == (Color.WHITE, Color.BLACK)
    assert g.label == (Fraction(-1), Fraction(3, 4))


def test_parse_default_label():
    assert parse_graph("vertex a black").label == (Fraction(1),)


@pytest.mark.parametrize("text", [
    "vertex a black\nedge a a",
    "vertex a black\nvertex a white",
    "vertex a black\nedge a b",
    "vertex a black 0",
    "vertex a black 0/5",
    "vertex a black 1/0",
    "vertex a black 1.5",
    "vertex a black x",
    "vertex a grey",
    "vertex a",
    "edge a",
    "node a black",
])
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_text_and_json_round_trip():
    g = parse_graph("vertex a white -2/3\nvertex b black\nvertex c black 5\nedge a b\nedge c b")
    assert parse_graph(g.to_text()) == g
    assert ColoredGraph.from_json(g.to_json()) == g


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        ColoredGraph(("a", "b"), (Color.BLACK,) * 2, (Fraction(1),) * 2, (0b10, 0))
    with pytest.raises(ValueError):
        ColoredGraph(("a",), (Color.BLACK,), (Fraction(0),), (0,))


# -- families -------------------------------------------------------------------------

def test_family_A3_is_path():
    g = family("A:3")
    assert g.n == 3 and g.all_black() and sorted(g.edges()) == [(0, 1), (1, 2)]


def test_family_E8_branch_at_node_4():
    g = family("E:8")
    degs = [g.degree(i) for i in range(8)]
    assert degs.count(3) == 1 and degs[3] == 3
    assert sorted(g.edges()) == sorted([(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)])


def test_family_D_and_Cl():
    assert sorted(family("D:5").edges()) == [(0, 2), (1, 2), (2, 3), (3, 4)]
    g = family("Cl:1,1")
    assert g.n == 2 and g.adjacent(0, 1)
    assert sorted(c.value for c in g.color) == ["black", "white"]
    assert family("Cl", 2, 3) == family("Cl:2,3")


@pytest.mark.parametrize("spec", ["A:0", "D:3", "E:5", "Cl:0,0", "Z:3", "A", "Cl:1", "A:x"])
def test_family_errors(spec):
    with pytest.raises(GraphFormatError):
        family(spec)


# -- build_space ---------------------------------------------------------------------

def test_build_space_examples():
    assert build_space(family("A:1"))[0].gram.tolist() == [[1]]
    assert build_space(family("K:2"))[0].gram.tolist() == [[1, 1], [0, 1]]
    white = parse_graph("vertex a white\nvertex b white")
    assert build_space(white)[0].gram.tolist() == [[0, 0], [0, 0]]


def test_build_space_passes_labels():
    g = parse_graph("vertex a black -2\nvertex b white 1/3")
    assert build_space(g)[1] == (Fraction(-2), Fraction(1, 3))


@pytest.mark.parametrize("spec", ["A:4", "D:5", "D:6", "E:6", "E:7", "E:8", "K:4", "Cl:1,2",
                                  "Cl:3,1"])
def test_classification_invariant_under_relabeling(spec):
    g = family(spec)
    c = classify_quadratic(build_space(g)[0])
    rng = random.Random(spec)
    for _ in range(50):
        order = list(range(g.n))
        rng.shuffle(order)
        assert classify_quadratic(build_space(g.permuted(order))[0]) == c


# -- reduction -------------------------------------------------------------------------

def test_reduce_D4_collapses_the_three_leaves():
    # D:4 is the claw: v1, v2 and v4 all have neighbourhood {v3}
    rep = reduce_graph(family("D:4"))
    assert rep.class_of[0] == rep.class_of[1] == rep.class_of[3] != rep.class_of[2]
    assert is_isomorphic(rep.reduced.adj, family("A:2").adj)


def test_reduce_D5_is_A4():
    rep = reduce_graph(family("D:5"))
    assert rep.class_of[0] == rep.class_of[1] and len(set(rep.class_of)) == 4
    assert is_isomorphic(rep.reduced.adj, family("A:4").adj)


def test_reduce_examples():
    assert reduce_graph(family("A:6")).reduced == family("A:6")
    edgeless = ColoredGraph.plain(5, [])
    assert reduce_graph(edgeless).reduced.n == 1


def test_reduce_invariants_random():
    rng = random.Random(2)
    for _ in range(300):
        g = random_graph(rng.randint(1, 10), rng)
        rep = reduce_graph(g)
        for i in range(g.n):
            for j in range(g.n):
                twins = not g.adjacent(i, j) and g.adj[i] == g.adj[j]
                assert (rep.class_of[i] == rep.class_of[j]) == twins
        red = rep.reduced
        assert all(red.adj[i] != red.adj[j] for i in range(red.n) for j in range(i))
        assert reduce_graph(red).reduced == red


# -- line graphs -------------------------------------------------------------------------

def test_root_of_paths():
    for n in range(1, 9):
        rep = line_graph_root(family("A", n))
        assert rep.is_line_graph and rep.root.n == n + 1
        assert is_isomorphic(line_graph_adj(len(rep.root.edges), rep.root.edges), family("A", n).adj)
        assert nx.is_isomorphic(nx.Graph(list(rep.root.edges)), nx.path_graph(n + 1))


def test_root_of_triangle_is_triangle():
    rep = line_graph_root(family("K:3"))
    assert rep.is_line_graph and rep.root.n == 3 and len(rep.root.edges) == 3


def test_E6_not_line_graph():
    assert not line_graph_root(family("E:6")).is_line_graph


def test_root_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError):
        line_graph_root(ColoredGraph.plain(3, [(0, 1)]))


def test_beineke_examples():
    claw = ColoredGraph.plain(4, [(0, 1), (0, 2), (0, 3)])
    assert not beineke_check(claw)
    assert beineke_check(family("A:5"))
    assert not beineke_check(family("E:7"))


def test_beineke_graphs_are_minimal_non_line_graphs():
    assert len(BEINEKE_GRAPHS) == 9
    for n, adj in BEINEKE_GRAPHS:
        h = ColoredGraph.plain(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                                   if adj[i] >> j & 1])
        assert not line_graph_root(h).is_line_graph
        for drop in range(n):
            sub = h.induced([v for v in range(n) if v != drop])
            parts = nx.connected_components(nx_graph(sub))
            for comp in parts:
                assert line_graph_root(sub.induced(sorted(comp))).is_line_graph


def test_krausz_agrees_with_beineke_1000():
    rng = random.Random(20240601)
    for _ in range(1000):
        g = random_connected_graph(rng.randint(1, 10), rng, p=rng.choice([0.1, 0.3, 0.5, 0.8]))
        rep = line_graph_root(g)
        assert rep.is_line_graph == beineke_check(g)
        if rep.is_line_graph:
            ladj = line_graph_adj(len(rep.root.edges), rep.root.edges)
            assert is_isomorphic(ladj, g.adj)
            assert nx.is_isomorphic(nx.line_graph(nx.Graph(list(rep.root.edges))), nx_graph(g))


def test_line_graphs_of_random_roots():
    rng = random.Random(9)
    for _ in range(200):
        k = rng.randint(2, 7)
        root = random_connected_graph(k, rng)
        edges = root.edges()
        g = ColoredGraph.from_edges([str(i) for i in range(len(edges))],
                                    [(i, j) for i in range(len(edges)) for j in range(i + 1, len(edges))
                                     if set(edges[i]) & set(edges[j])])
        if g.n == 0 or not g.is_connected():
            continue
        rep = line_graph_root(g)
        assert rep.is_line_graph
        assert is_isomorphic(line_graph_adj(len(rep.root.edges), rep.root.edges), g.adj)


def test_is_isomorphic_against_networkx():
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randint(1, 9)
        a = random_graph(n, rng)
        if rng.random() < 0.5:
            order = list(range(n))
            rng.shuffle(order)
            b = a.permuted(order)
        else:
            b = random_graph(n, rng)
        assert is_isomorphic(a.adj, b.adj) == nx.is_isomorphic(nx_graph(a), nx_graph(b))


# -- minus-type hexads ----------------------------------------------------------------

def test_hexad_E6_is_everything():
    assert find_minus_type_6_subgraph(family("E:6")) == tuple(range(6))


@pytest.mark.parametrize("spec", ["E:7", "E:8"])
def test_hexad_in_E(spec):
    g = family(spec)
    verts = find_minus_type_6_subgraph(g)
    assert verts is not None and len(verts) == 6
    assert classify_quadratic(build_space(g.induced(verts))[0]) == QuadClass(6, 0, QType.MINUS)


def test_hexad_rejects_line_graph():
    with pytest.raises(ValueError):
        find_minus_type_6_subgraph(family("A:5"))


def test_hexad_random_non_line_graphs():
    rng = random.Random(13)
    tried = 0
    while tried < 30:
        g = random_connected_graph(rng.randint(6, 10), rng)
        if line_graph_root(reduce_graph(g).reduced).is_line_graph:
            continue
        tried += 1
        verts = find_minus_type_6_subgraph(g)
        assert verts is not None
        assert classify_quadratic(build_space(g.induced(verts))[0]) == QuadClass(6, 0, QType.MINUS)
