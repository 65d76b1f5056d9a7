import networkx as nx
import pytest
from hypothesis import given

from conftest import g_of, graphs, to_nx
from nhca.graph import (Graph, GraphError, ParseError, complement, complete_graph, cycle_graph,
                        emit_graph, find_isomorphism, induced_subgraph, is_isomorphic_small,
                        parse_graph, path_graph, relabel)


def test_parse_c4():
    g = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert (g.n, g.m) == (4, 4)
    assert g == cycle_graph(4)


def test_parse_single_vertex():
    g = parse_graph("1 0\n")
    assert (g.n, g.m) == (1, 0)


def test_parse_loop_reports_line():
    with pytest.raises(ParseError, match="loop at line 2"):
        parse_graph("3 1\n0 0\n")


@pytest.mark.parametrize("text, msg", [
    ("", "missing header"),
    ("3 2\n0 1\n", "expected 2 edges"),
    ("3 1\n0 1\n1 2\n", "too many edges at line 3"),
    ("3 1\n0 5\n", "out of range at line 2"),
    ("3 2\n0 1\n1 0\n", "duplicate edge at line 3"),
    ("3 1\n0 x\n", "malformed line 2"),
    ("3 1\n0 1 2\n", "malformed line 2"),
])
def test_parse_errors(text, msg):
    with pytest.raises(ParseError, match=msg):
        parse_graph(text)


def test_parse_skips_comments_and_blanks():
    g = parse_graph("# c\n\n2 1\n  # another\n0 1\n")
    assert g.m == 1 and g.has_edge(1, 0)


def test_from_edges_rejects_bad_input():
    for edges in ([(0, 0)], [(0, 1), (1, 0)], [(0, 3)]):
        with pytest.raises(GraphError):
            Graph.from_edges(3, edges)


def test_induced_subgraph_examples():
    p3, index = induced_subgraph(cycle_graph(5), [0, 1, 2])
    assert p3 == path_graph(3) and index == {0: 0, 1: 1, 2: 2}
    k4 = complete_graph(4)
    assert induced_subgraph(k4, range(4))[0] == k4
    assert induced_subgraph(cycle_graph(6), [0, 2, 4])[0].m == 0


def test_isomorphism_examples():
    prism = g_of(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert not is_isomorphic_small(cycle_graph(6), prism)
    assert is_isomorphic_small(prism, complement(cycle_graph(6)))
    assert not is_isomorphic_small(cycle_graph(4), path_graph(4))


@given(graphs(nmax=8))
def test_emit_parse_roundtrip(g):
    assert parse_graph(emit_graph(g)) == g


@given(graphs(nmax=8))
def test_isomorphism_matches_networkx(g):
    perm = list(reversed(range(g.n)))
    h = relabel(g, perm)
    f = find_isomorphism(g, h)
    assert f is not None
    assert all(h.has_edge(f[u], f[v]) for u, v in g.edges())
    other = complement(g)
    assert is_isomorphic_small(g, other) == nx.is_isomorphic(to_nx(g), to_nx(other))


@given(graphs(nmax=8))
def test_adjacency_views_agree(g):
    nxg = to_nx(g)
    for v in range(g.n):
        assert g.nset(v) == frozenset(nxg[v])
        assert g.degree(v) == nxg.degree(v)
    assert sorted(map(tuple, g.edge_array().tolist())) == sorted(g.edges())
