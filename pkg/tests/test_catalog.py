import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cstar, graphs, to_nx, wheel
from nhca.catalog import (FINITE, CatalogError, FisWitness, catalog_graph, check_witness, classify_fis,
                          net_graph, simplicial_vertices, tent_graph, validate_catalog)
from nhca.chordal import is_chordal
from nhca.graph import add_vertex, cycle_graph, disjoint_union, complete_graph, induced_subgraph, relabel
from nhca.oracle import oracle_nhca


def test_k23_sides():
    g = catalog_graph("K23")
    assert nx.is_bipartite(to_nx(g))
    sides = nx.bipartite.sets(to_nx(g))
    assert sorted(map(len, sides)) == [2, 3]


def test_twin_c5_degrees():
    assert sorted(catalog_graph("twin-C5").degrees().tolist()) == [2, 2, 2, 2, 3, 3]


def test_dagger_net_terminals():
    g = catalog_graph("dagger-net")
    simp = simplicial_vertices(g)
    assert len(simp) == 3 and all(g.degree(v) == 1 for v in simp)


def test_unknown_family():
    with pytest.raises(CatalogError):
        catalog_graph("petersen")


def test_classify_examples():
    w = classify_fis(cstar(4), range(5))
    assert w.family == "C-star" and w.apex == 4 and sorted(w.hole) == [0, 1, 2, 3]
    w = classify_fis(wheel(5), range(6))
    assert w.family == "wheel" and w.apex == 5
    assert classify_fis(cycle_graph(5), range(5)) is None


def test_classify_rejects_bad_sets():
    g = cycle_graph(5)
    assert classify_fis(g, [0, 0, 1]) is None
    assert classify_fis(g, [0, 9]) is None


def test_validate_catalog_passes():
    rep = validate_catalog()
    tags = {t for t, _ in rep.checks}
    assert tags == set(FINITE)
    assert ("whipping-top", "diameter 3 attained by {t1,t3},{t2,t3} only") in rep.checks


def test_long_claw_terminals():
    assert simplicial_vertices(catalog_graph("long-claw")) == [4, 5, 6]


def test_fis2_minus_antipodal_vertex():
    g = catalog_graph("FIS-2")
    rest, _ = induced_subgraph(g, range(6))
    assert nx.is_isomorphic(to_nx(rest), nx.cycle_graph(6))
    assert not is_chordal(rest) and oracle_nhca(rest).is_nhca


def test_named_families_match_networkx_generators():
    # cross-check transcriptions against independently built graphs
    assert nx.is_isomorphic(to_nx(catalog_graph("K23")), nx.complete_bipartite_graph(2, 3))
    assert nx.is_isomorphic(to_nx(catalog_graph("domino")), nx.grid_2d_graph(2, 3))
    assert nx.is_isomorphic(to_nx(catalog_graph("C6-complement")), nx.complement(nx.cycle_graph(6)))
    claw = nx.Graph([(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
    assert nx.is_isomorphic(to_nx(catalog_graph("long-claw")), claw)


@pytest.mark.parametrize("n", range(2, 7))
def test_nets_are_minimal_forbidden(n):
    g = net_graph(n)
    assert classify_fis(g, range(g.n)).family == "dagger-net"
    if g.n <= 10:
        assert not oracle_nhca(g).is_nhca
        for x in range(g.n):
            assert oracle_nhca(induced_subgraph(g, [y for y in range(g.n) if y != x])[0]).is_nhca


@pytest.mark.parametrize("n", range(3, 8))
def test_tents_are_minimal_forbidden(n):
    g = tent_graph(n)
    assert classify_fis(g, range(g.n)).family == "double-dagger"
    if g.n <= 10:
        assert not oracle_nhca(g).is_nhca
        for x in range(g.n):
            assert oracle_nhca(induced_subgraph(g, [y for y in range(g.n) if y != x])[0]).is_nhca


def test_small_net_and_tent_are_catalog_records():
    assert nx.is_isomorphic(to_nx(net_graph(2)), to_nx(catalog_graph("dagger-net")))
    assert nx.is_isomorphic(to_nx(tent_graph(4)), to_nx(catalog_graph("double-dagger")))


def test_check_witness_violations():
    g = wheel(5)
    ok = classify_fis(g, range(6))
    assert check_witness(g, ok) is None
    assert check_witness(g, FisWitness("wheel", (0, 1, 2))) is not None
    assert check_witness(g, FisWitness("C-star", ok.vertices, ok.hole, ok.apex)) == \
        "vertex set is a wheel, not a C-star"
    assert check_witness(g, FisWitness("wheel", ok.vertices, ok.hole[1:] + (ok.apex,), ok.hole[0])) is not None
    assert check_witness(g, FisWitness("nope", ok.vertices)) == "unknown family 'nope'"


@given(st.sampled_from(FINITE), st.randoms())
def test_classify_is_label_invariant(tag, rnd):
    g = catalog_graph(tag)
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert classify_fis(relabel(g, perm), range(g.n)).family == tag


@given(graphs(nmax=8))
def test_classified_sets_are_forbidden(g):
    w = classify_fis(g, range(g.n))
    if w is not None:
        assert not oracle_nhca(g).is_nhca
        assert check_witness(g, w) is None


@given(st.integers(4, 12))
def test_holes_with_apex(k):
    assert classify_fis(wheel(k), range(k + 1)).family == "wheel"
    assert classify_fis(cstar(k), range(k + 1)).family == "C-star"
    # a hole plus a vertex with some but not all hole neighbors is neither
    g = add_vertex(cycle_graph(k), [0])
    w = classify_fis(g, range(k + 1))
    assert w is None or w.family not in ("wheel", "C-star")
    assert classify_fis(disjoint_union(cycle_graph(k), complete_graph(2)), range(k + 2)) is None
