import networkx as nx
from hypothesis import given

from conftest import g_of, graphs, to_nx
from nhca.chordal import any_hole, check_chordal, find_hole, is_chordal, is_hole
from nhca.graph import complete_graph, cycle_graph, disjoint_union


def _is_peo(g, order):
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        if any(not g.has_edge(a, b) for i, a in enumerate(later) for b in later[i + 1:]):
            return False
    return True


def test_complete_graph_is_chordal():
    chk = check_chordal(complete_graph(4))
    assert chk.is_chordal and _is_peo(complete_graph(4), chk.elimination.tolist())


def test_c4_has_failure_witness():
    chk = check_chordal(cycle_graph(4))
    w = chk.witness
    assert w is not None and not cycle_graph(4).has_edge(w.a, w.b)
    assert cycle_graph(4).has_edge(w.v, w.a) and cycle_graph(4).has_edge(w.v, w.b)


def test_tree_is_chordal():
    tree = g_of(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    assert is_chordal(tree)


def test_find_hole_c4():
    g = cycle_graph(4)
    hole = find_hole(g, check_chordal(g).witness)
    assert sorted(hole.vertices) == [0, 1, 2, 3] and is_hole(g, hole.vertices)


def test_find_hole_c6_with_chord():
    g = g_of(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    hole = find_hole(g, check_chordal(g).witness)
    assert set(hole.vertices) in ({0, 1, 2, 3}, {0, 3, 4, 5})


def test_find_hole_c5_plus_triangle():
    g = disjoint_union(cycle_graph(5), complete_graph(3))
    hole = find_hole(g, check_chordal(g).witness)
    assert set(hole.vertices) == {0, 1, 2, 3, 4}


def test_hole_rotation_and_mirror():
    h = any_hole(cycle_graph(6))
    assert h.rotated(2)[0] == h[2]
    m = h.mirrored()
    assert m[0] == h[0] and m[1] == h[-1]


@given(graphs(nmax=10))
def test_chordality_matches_networkx(g):
    chk = check_chordal(g)
    assert chk.is_chordal == nx.is_chordal(to_nx(g))
    if chk.is_chordal:
        assert _is_peo(g, chk.elimination.tolist())
    else:
        hole = find_hole(g, chk.witness)
        assert hole.k >= 4 and is_hole(g, hole.vertices)
