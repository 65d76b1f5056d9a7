from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from conftest import g_of, nhca_graphs, wheel
from nhca.arcmodel import (CircularArcModel, ModelFormatError, build_ca_model, interval_to_arcs,
                           model_from_json, normalize_interval_model, verify_model)
from nhca.auxgraph import build_aux
from nhca.chordal import Hole
from nhca.graph import complete_graph, cycle_graph, path_graph
from nhca.holeframe import normalize_hole
from nhca.interval import IntervalModel, recognize_interval


def _arcs(pairs, den):
    return CircularArcModel(np.array([a for a, _ in pairs], np.int64), np.array([b for _, b in pairs], np.int64), den)


def _cycle_model(k):
    g = cycle_graph(k)
    hole, proj = normalize_hole(g, Hole(tuple(range(k))))
    aux = build_aux(g, proj)
    im = recognize_interval(aux.omega)
    return g, aux, im


def _covers_by_sampling(m, idx):
    """Independent check: do the arcs in idx cover every gap midpoint?"""
    pts = sorted({Fraction(int(x), m.den) for x in list(m.ccw) + list(m.cw)})
    mids = [(a + b) / 2 for a, b in zip(pts, pts[1:] + [pts[0] + 1])]

    def inside(v, x):
        a, b = m.arc(v)
        x = x % 1
        return a <= x <= b if a <= b else (x >= a or x <= b)

    return all(any(inside(v, x) for v in idx) for x in mids + pts)


def test_wrapping_pair_covers():
    m = _arcs([(1, 6), (5, 2)], 10)
    chk = verify_model(g_of(2, [(0, 1)]), m)
    assert chk.status == "cover" and chk.cover == (0, 1)
    assert _covers_by_sampling(m, [0, 1])


def test_c4_model():
    g, aux, im = _cycle_model(4)
    m = build_ca_model(aux, im)
    assert verify_model(g, m).ok
    assert _covers_by_sampling(m, range(4))
    for a in range(4):
        for b in range(a + 1, 4):
            assert not _covers_by_sampling(m, [a, b])


def test_c5_model():
    g, aux, im = _cycle_model(5)
    assert verify_model(g, build_ca_model(aux, im)).ok


def test_interval_embedding_leaves_point_uncovered():
    g = path_graph(4)
    im = recognize_interval(g)
    m = interval_to_arcs(im.lp, im.rp)
    assert verify_model(g, m).ok
    assert all(m.ccw[v] < m.cw[v] < m.den for v in range(4))


def test_wheel_model_has_cover():
    # C5 arcs plus a hub meeting all of them
    pairs = [(18, 4), (2, 8), (6, 12), (10, 16), (14, 20), (1, 19)]
    m = _arcs(pairs, 20)
    chk = verify_model(wheel(5), m)
    assert chk.status == "cover" and 2 <= len(chk.cover) <= 3
    assert _covers_by_sampling(m, chk.cover)


def test_mirrored_model_normalizes_identically():
    g, aux, im = _cycle_model(4)
    top = int(max(im.lp.max(), im.rp.max())) + 1
    flipped = IntervalModel(top - im.rp, top - im.lp)
    a = normalize_interval_model(aux, im)
    b = normalize_interval_model(aux, flipped)
    assert np.array_equal(a.lp, b.lp) and np.array_equal(a.rp, b.rp)
    c = normalize_interval_model(aux, a)
    assert np.array_equal(a.lp, c.lp) and np.array_equal(a.rp, c.rp)


def test_normalize_ranks_rationals():
    g, aux, im = _cycle_model(4)
    scaled = IntervalModel(im.lp * 7 + 3, im.rp * 7 + 3)
    a = normalize_interval_model(aux, im)
    b = normalize_interval_model(aux, scaled)
    assert np.array_equal(a.lp, b.lp)
    assert sorted(a.lp.tolist() + a.rp.tolist()) == list(range(1, 2 * len(a.lp) + 1))


@pytest.mark.parametrize("pairs, den, msg", [
    ([(1, 2), (2, 3)], 4, "duplicate endpoint"),
    ([(0, 2), (3, 4)], 4, "endpoint outside (0,1]"),
])
def test_invalid_models(pairs, den, msg):
    chk = verify_model(g_of(2, [(0, 1)]), _arcs(pairs, den))
    assert chk.status == "invalid" and chk.message == msg


def test_adjacency_mismatch():
    chk = verify_model(g_of(2, []), _arcs([(1, 5), (3, 7)], 10))
    assert chk.status == "mismatch"
    chk = verify_model(g_of(2, [(0, 1)]), _arcs([(1, 2), (3, 4)], 10))
    assert chk.status == "mismatch"


def test_json_roundtrip_and_errors():
    g, aux, im = _cycle_model(5)
    m = build_ca_model(aux, im)
    assert model_from_json(m.to_json()) == m
    with pytest.raises(ModelFormatError):
        model_from_json({"arcs": [{"v": 0, "ccw": 0.5, "cw": "1/2"}]})
    with pytest.raises(ModelFormatError):
        model_from_json({"arcs": [{"v": 1, "ccw": "1/3", "cw": "1/2"}]})
    with pytest.raises(ModelFormatError):
        model_from_json({"nothing": []})


def test_complete_graph_model():
    g = complete_graph(4)
    im = recognize_interval(g)
    assert verify_model(g, interval_to_arcs(im.lp, im.rp)).ok


@given(nhca_graphs(nmin=4, nmax=60))
def test_built_models_verify(g):
    from nhca.driver import recognize
    c = recognize(g)
    assert c.is_nhca and verify_model(g, c.model).ok
    m = c.model
    # independent adjacency check with exact arithmetic
    for u in range(min(g.n, 12)):
        for v in range(u + 1, min(g.n, 12)):
            (a1, b1), (a2, b2) = m.arc(u), m.arc(v)

            def pts(a, b):
                return [(a, b)] if a <= b else [(a, Fraction(1)), (Fraction(0), b)]

            meet = any(x1 <= y2 and x2 <= y1 for x1, y1 in pts(a1, b1) for x2, y2 in pts(a2, b2))
            assert meet == g.has_edge(u, v)
