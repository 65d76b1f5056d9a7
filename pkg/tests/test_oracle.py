import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cstar, g_of, graphs, wheel
from nhca.arcmodel import verify_model
from nhca.catalog import catalog_graph, check_witness
from nhca.graph import GraphError, complete_graph, cycle_graph
from nhca.oracle import (arcs_intersection_graph, exact_nhca, gen_cycle_with_trees, gen_random_graph,
                         gen_random_nhca, oracle_model_enum, oracle_nhca)


def test_odd_hole_is_nhca():
    assert oracle_nhca(cycle_graph(7)).is_nhca


@pytest.mark.parametrize("tag", ["K23", "domino"])
def test_catalog_member_found(tag):
    v = oracle_nhca(catalog_graph(tag))
    assert not v.is_nhca and v.witness.family == tag


def test_oracle_size_limit():
    with pytest.raises(GraphError):
        oracle_nhca(cycle_graph(11))


def test_model_enum_c4():
    m = oracle_model_enum(cycle_graph(4))
    assert m is not None and m.den == 8 and verify_model(cycle_graph(4), m).ok


def test_model_enum_w4_none():
    assert oracle_model_enum(wheel(4)) is None


def test_model_enum_k4_uncovered_point():
    g = complete_graph(4)
    m = oracle_model_enum(g)
    assert verify_model(g, m).ok
    # some gap between consecutive endpoints lies in no arc
    pts = sorted(set(m.ccw.tolist()) | set(m.cw.tolist()))
    mids = [p + 0.5 for p in pts]

    def inside(v, x):
        a, b = m.ccw[v], m.cw[v]
        return a <= x <= b if a <= b else (x >= a or x <= b)

    assert any(not any(inside(v, x) for v in range(4)) for x in mids)


def test_model_enum_limit():
    with pytest.raises(GraphError):
        oracle_model_enum(cycle_graph(6))


def test_generator_examples():
    from nhca.driver import recognize
    assert recognize(gen_random_nhca(1, 6)).is_nhca
    g = gen_random_nhca(5, 1)
    assert (g.n, g.m) == (1, 0)
    with pytest.raises(ValueError):
        gen_random_nhca(0, 0)


def test_arcs_intersection_wraps():
    import numpy as np
    g = arcs_intersection_graph(np.array([0.9, 0.05, 0.5]), np.array([0.2, 0.1, 0.1]))
    assert g.has_edge(0, 1) and not g.has_edge(0, 2) and not g.has_edge(1, 2)


@given(st.integers(0, 2**31 - 1), st.integers(1, 10))
def test_generated_graphs_are_nhca(seed, n):
    g = gen_random_nhca(seed, n)
    assert g.n == n
    assert oracle_nhca(g).is_nhca and exact_nhca(g)


@given(st.integers(0, 2**31 - 1), st.integers(4, 40))
def test_other_generators(seed, n):
    g = gen_cycle_with_trees(seed, n)
    assert g.n == n and g.m == n
    assert gen_random_graph(seed, 7) == gen_random_graph(seed, 7)


@given(graphs(nmax=8))
def test_catalog_search_agrees_with_definition(g):
    v = oracle_nhca(g)
    assert v.is_nhca == exact_nhca(g)
    if not v.is_nhca:
        assert check_witness(g, v.witness) is None


@given(graphs(nmax=5))
def test_enumeration_agrees_with_catalog_search(g):
    m = oracle_model_enum(g)
    assert (m is not None) == oracle_nhca(g).is_nhca
    if m is not None:
        assert verify_model(g, m).ok


def test_cstar_and_wheel_verdicts():
    for k in range(4, 9):
        assert oracle_nhca(cstar(k)).witness.family == "C-star"
        assert oracle_nhca(wheel(k)).witness.family == "wheel"
    assert oracle_nhca(g_of(3, [(0, 1)])).is_nhca
