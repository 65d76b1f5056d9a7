import networkx as nx
import numpy as np
from hypothesis import given

from conftest import g_of, nhca_graphs, perturbed_nhca, to_nx
from nhca.auxgraph import LEFT, RIGHT, TBAR, W, build_aux, check_sector_cliques, classify_edge, short_path_fis
from nhca.catalog import FisWitness, check_witness
from nhca.chordal import Hole, check_chordal, find_hole
from nhca.graph import cycle_graph
from nhca.holeframe import normalize_hole
from nhca.interval import interval_model_or_none


def _frame(g, k=None):
    hole = Hole(tuple(range(k))) if k else find_hole(g, check_chordal(g).witness)
    res = normalize_hole(g, hole)
    assert not isinstance(res, FisWitness)
    return res


def _with(k, *nbrs, extra=()):
    edges = [(i, (i + 1) % k) for i in range(k)]
    for j, nb in enumerate(nbrs):
        edges += [(x, k + j) for x in nb]
    return g_of(k + len(nbrs), edges + list(extra))


def test_c4_aux_is_path():
    g = cycle_graph(4)
    hole, proj = _frame(g, 4)
    aux = build_aux(g, proj)
    assert (aux.omega.n, aux.omega.m) == (8, 7)
    assert nx.is_isomorphic(to_nx(aux.omega), nx.path_graph(8))
    assert aux.omega.degree(aux.w) == 1
    # w - h3^l - h0^l - h1^l - h2 - h3^r - h0^r - h1^r
    order = [aux.w, aux.lid[3], aux.lid[0], aux.lid[1], aux.tid[2], aux.rid[3], aux.rid[0], aux.rid[1]]
    assert all(aux.omega.has_edge(int(a), int(b)) for a, b in zip(order, order[1:]))
    assert aux.Tcc.tolist() == [3] and aux.Tc.tolist() == [1]


def test_c6_aux_is_path():
    g = cycle_graph(6)
    _, proj = _frame(g, 6)
    aux = build_aux(g, proj)
    assert nx.is_isomorphic(to_nx(aux.omega), nx.path_graph(10))


def test_classify_edge_c4():
    g = cycle_graph(4)
    _, proj = _frame(g, 4)
    assert classify_edge(g, proj, 1, 2) == "clockwise"
    assert classify_edge(g, proj, 3, 2) == "counterclockwise"


def test_classify_edge_disjoint():
    # v sees only h0, u sees only h3 of a C6, u ~ v: runs meet on neither side
    g = _with(6, [0], [3], extra=[(6, 7)])
    _, proj = _frame(g, 6)
    w = classify_edge(g, proj, 6, 7)
    assert isinstance(w, FisWitness) and check_witness(g, w) is None


def test_dot_labels():
    g = cycle_graph(4)
    _, proj = _frame(g, 4)
    dot = build_aux(g, proj).to_dot()
    assert 'label="w"' in dot and 'label="g:2/Tbar"' in dot and 'label="g:0/L"' in dot
    assert 'label="g:0/R"' in dot


def test_sector_wheel():
    # u, x see h5 h0 h1, are nonadjacent, and both have a counterclockwise mate y
    g = _with(6, [5, 0, 1], [5, 0, 1], [4, 5], extra=[(6, 8), (7, 8)])
    _, proj = _frame(g, 6)
    aux = build_aux(g, proj)
    w = check_sector_cliques(g, aux)
    assert w.family == "wheel" and w.apex == 0 and set(w.hole) == {6, 5, 7, 1}


def test_sector_long_claw():
    # h0..h7; u, x see h7 h0; v, y see h6 h7; u~v, x~y
    g = _with(8, [7, 0], [7, 0], [6, 7], [6, 7], extra=[(8, 10), (9, 11)])
    _, proj = _frame(g, 8)
    aux = build_aux(g, proj)
    w = check_sector_cliques(g, aux)
    assert w.family == "long-claw" and set(w.vertices) == {0, 1, 2, 8, 9, 10, 11}


def test_sector_shared_mate_cstar():
    g = _with(8, [7, 0], [7, 0], [6, 7], extra=[(8, 10), (9, 10)])
    _, proj = _frame(g, 8)
    aux = build_aux(g, proj)
    w = check_sector_cliques(g, aux)
    assert w.family == "C-star" and w.apex == 2 and set(w.hole) == {10, 8, 0, 9}


def test_sector_cliques_ok_on_cycle():
    g = cycle_graph(7)
    _, proj = _frame(g, 7)
    assert check_sector_cliques(g, build_aux(g, proj)) is None


def test_short_path_both_outside():
    # v sees h5 h0 h1; x sees h1 h2 h3; y sees h3 h4 h5; v x y a triangle
    g = _with(6, [5, 0, 1], [1, 2, 3], [3, 4, 5], extra=[(6, 7), (6, 8), (7, 8)])
    _, proj = _frame(g, 6)
    aux = build_aux(g, proj)
    P = [aux.lid[6], aux.tid[7], aux.tid[8], aux.rid[6]]
    w = short_path_fis(g, aux, P)
    assert w.family == "wheel" and w.apex == 8 and set(w.hole) == {6, 7, 3, 4, 5}


def _aux_of(g):
    chk = check_chordal(g)
    if chk.is_chordal:
        return None
    res = normalize_hole(g, find_hole(g, chk.witness))
    if isinstance(res, FisWitness):
        return None
    aux = build_aux(g, res[1])
    return None if isinstance(aux, FisWitness) else aux


def _check_layout(g, aux):
    n_t = int(aux.in_T.sum())
    assert aux.omega.n == g.n + n_t + 1
    assert np.sum(aux.side == LEFT) == np.sum(aux.side == RIGHT) == n_t
    assert np.sum(aux.side == W) == 1 and aux.side[aux.w] == W
    for x in range(aux.omega.n - 1):
        v = int(aux.phi[x])
        assert aux.in_T[v] == (aux.side[x] != TBAR)
    # the back-map only ever loses adjacency
    for a, b in aux.omega.edges():
        pa, pb = int(aux.phi[a]), int(aux.phi[b])
        if -1 not in (pa, pb) and pa != pb:
            assert g.has_edge(pa, pb)


@given(perturbed_nhca(nmax=40))
def test_size_bounds_and_layout(g):
    aux = _aux_of(g)
    if aux is not None:
        assert aux.omega.n <= 2 * g.n and aux.omega.m <= 2 * g.m
        _check_layout(g, aux)


@given(nhca_graphs(nmin=4, nmax=120))
def test_aux_interval_on_nhca(g):
    chk = check_chordal(g)
    if not chk.is_chordal:
        res = normalize_hole(g, find_hole(g, chk.witness))
        assert not isinstance(res, FisWitness)
        aux = build_aux(g, res[1])
        assert not isinstance(aux, FisWitness)
        assert check_sector_cliques(g, aux) is None
        assert interval_model_or_none(aux.omega) is not None
        assert aux.omega.n <= 2 * g.n and aux.omega.m <= 2 * g.m
