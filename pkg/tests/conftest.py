import os

import networkx as nx
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from nhca.graph import Graph, add_vertex, cycle_graph, disjoint_union, complete_graph

settings.register_profile("default", deadline=None, max_examples=150,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("long", deadline=None, max_examples=2000,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def g_of(n, edges):
    return Graph.from_edges(n, list(edges))


def wheel(k):
    return add_vertex(cycle_graph(k), range(k))


def cstar(k):
    return disjoint_union(cycle_graph(k), complete_graph(1))


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, nmin=1, nmax=9):
    n = draw(st.integers(nmin, nmax))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    p = draw(st.sampled_from([0.2, 0.35, 0.5, 0.7]))
    bits = draw(st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b < p])


@st.composite
def nhca_graphs(draw, nmin=1, nmax=40):
    from nhca.oracle import gen_random_nhca
    n = draw(st.integers(nmin, nmax))
    seed = draw(st.integers(0, 2**31 - 1))
    return gen_random_nhca(seed, n)


@st.composite
def perturbed_nhca(draw, nmin=4, nmax=30):
    """An NHCA graph with one or two edges toggled, usually not NHCA."""
    g = draw(nhca_graphs(nmin, nmax))
    edges = set(g.edges())
    for _ in range(draw(st.integers(1, 2))):
        a = draw(st.integers(0, g.n - 1))
        b = draw(st.integers(0, g.n - 1).filter(lambda x: x != a))
        edges ^= {(min(a, b), max(a, b))}
    return Graph.from_edges(g.n, sorted(edges))
