"""Certifying interval recognition.

Positive answers come from LBFS+ sweeps checked for the interval-ordering
(umbrella) property; if a few sweeps do not settle a chordal graph, the
maximal cliques are ordered with a PQ-tree, which is exact.  Negative answers
are holes or minimal chordal non-interval sets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .chordal import Hole, InternalError, check_chordal, find_hole
from .graph import Graph, induced_subgraph
from .pqtree import consecutive_order

SWEEPS = 8

KINDS = ("hole", "long-claw", "whipping-top", "dagger-net", "double-dagger", "other-LB")


@dataclass(frozen=True, eq=False)
class IntervalModel:
    """Closed intervals ``[lp[v], rp[v]]`` with 2n distinct integer endpoints."""

    lp: np.ndarray
    rp: np.ndarray

    def __len__(self) -> int:
        return len(self.lp)

    def interval(self, v: int) -> tuple[int, int]:
        return int(self.lp[v]), int(self.rp[v])


@dataclass(frozen=True)
class NonIntervalWitness:
    vertices: tuple[int, ...]
    kind: str
    hole: Hole | None = None


# models -------------------------------------------------------------------

def model_from_spans(left, right) -> IntervalModel:
    """Turn closed spans (ties allowed) into distinct endpoints 1..2n.

    At equal coordinates left endpoints go first, so touching spans still
    intersect.
    """
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    n = len(left)
    coord = np.concatenate([left, right])
    side = np.concatenate([np.zeros(n, np.int64), np.ones(n, np.int64)])
    who = np.concatenate([np.arange(n), np.arange(n)])
    order = np.lexsort((who, side, coord))
    rank = np.empty(2 * n, dtype=np.int64)
    rank[order] = np.arange(1, 2 * n + 1)
    return IntervalModel(rank[:n], rank[n:])


def interval_mismatch(g: Graph, lp, rp) -> str | None:
    """None when the intervals realize ``g`` exactly, else a description."""
    lp = np.asarray(lp)
    rp = np.asarray(rp)
    n = g.n
    if len(lp) != n or len(rp) != n:
        return "wrong number of intervals"
    if n == 0:
        return None
    if np.any(lp >= rp):
        v = int(np.argmax(lp >= rp))
        return f"empty interval at vertex {v}"
    ends = np.concatenate([lp, rp])
    srt = np.sort(ends)
    if np.any(srt[1:] == srt[:-1]):
        return "duplicate endpoint"
    e = g.edge_array()
    if len(e):
        a, b = e[:, 0], e[:, 1]
        first = np.where(lp[a] < lp[b], a, b)
        second = np.where(lp[a] < lp[b], b, a)
        bad = lp[second] > rp[first]
        if np.any(bad):
            k = int(np.argmax(bad))
            return f"edge {int(a[k])} {int(b[k])} not realized"
        later = np.bincount(first, minlength=n)
    else:
        later = np.zeros(n, dtype=np.int64)
    # intervals starting inside [lp(v), rp(v)] must all be neighbours
    slp = np.sort(lp)
    inside = np.searchsorted(slp, rp) - np.searchsorted(slp, lp, side="right")
    diff = inside != later
    if np.any(diff):
        v = int(np.argmax(diff))
        for u in range(n):
            if u != v and lp[v] < lp[u] < rp[v] and not g.has_edge(u, v):
                return f"non-edge {min(u, v)} {max(u, v)} realized"
        return f"intersection count mismatch at vertex {v}"
    return None


def _sweep_model(g: Graph) -> IntervalModel | None:
    n = g.n
    init = np.arange(n, dtype=np.int64)
    for _ in range(SWEEPS):
        order = K.lbfs_order(n, g.indptr, g.indices, init)
        for cand in (order, order[::-1].copy()):
            reach = K.umbrella_reach(n, g.indptr, g.indices, cand)
            if len(reach):
                left = np.empty(n, np.int64)
                right = np.empty(n, np.int64)
                left[cand] = np.arange(n)
                right[cand] = reach
                return model_from_spans(left, right)
        init = order[::-1].copy()
    return None


def maximal_cliques(g: Graph, elimination: np.ndarray) -> list[list[int]]:
    """Maximal cliques of a chordal graph from a perfect elimination order."""
    n = g.n
    visit = elimination[::-1]
    pos = np.empty(n, dtype=np.int64)
    pos[visit] = np.arange(n)
    earlier = [0] * n
    parent = [-1] * n
    for v in visit.tolist():
        best, c = -1, 0
        for u in g.adj[v]:
            if pos[u] < pos[v]:
                c += 1
                if best == -1 or pos[u] > pos[best]:
                    best = u
        earlier[v] = c
        parent[v] = best
    dominated = [False] * n
    for u in range(n):
        p = parent[u]
        if p != -1 and earlier[u] == earlier[p] + 1:
            dominated[p] = True
    cliques = []
    for v in visit.tolist():
        if not dominated[v]:
            cliques.append([v] + [u for u in g.adj[v] if pos[u] < pos[v]])
    return cliques


def _clique_model(g: Graph, elimination: np.ndarray) -> IntervalModel | None:
    cliques = maximal_cliques(g, elimination)
    member: list[list[int]] = [[] for _ in range(g.n)]
    for i, c in enumerate(cliques):
        for v in c:
            member[v].append(i)
    order = consecutive_order(range(len(cliques)), member)
    if order is None:
        return None
    where = {c: i for i, c in enumerate(order)}
    left = [min(where[c] for c in member[v]) for v in range(g.n)]
    right = [max(where[c] for c in member[v]) for v in range(g.n)]
    return model_from_spans(left, right)


# recognition ----------------------------------------------------------------

def _chordal_model(g: Graph, elimination: np.ndarray) -> IntervalModel | None:
    model = _sweep_model(g)
    if model is None:
        model = _clique_model(g, elimination)
    return model


def is_interval(g: Graph) -> bool:
    chk = check_chordal(g)
    if not chk.is_chordal:
        return False
    return _chordal_model(g, chk.elimination) is not None


def _is_interval_on(g: Graph, s) -> bool:
    return is_interval(induced_subgraph(g, list(s))[0])


def minimalize_non_interval(g: Graph, s) -> tuple[int, ...]:
    """Shrink ``s`` to a minimal non-interval vertex set.

    Chunked deletion first (being interval is hereditary, so every accepted
    deletion keeps the set non-interval), then a single-vertex pass that
    certifies minimality.
    """
    cur = sorted(set(int(x) for x in s))
    if _is_interval_on(g, cur):
        raise ValueError("vertex set induces an interval graph")
    chunk = max(1, len(cur) // 2)
    while chunk >= 1:
        i = 0
        while i < len(cur):
            trial = cur[:i] + cur[i + chunk:]
            if trial and not _is_interval_on(g, trial):
                cur = trial
            else:
                i += chunk
        if chunk == 1:
            break
        chunk //= 2
    for x in cur:
        rest = [y for y in cur if y != x]
        if not _is_interval_on(g, rest):
            raise InternalError("minimalization left a removable vertex")
    return tuple(cur)


def _kind(g: Graph, vertices) -> str:
    from .catalog import classify_fis

    w = classify_fis(g, vertices)
    if w is not None and w.family in KINDS:
        return w.family
    return "other-LB"


def recognize_interval(g: Graph) -> IntervalModel | NonIntervalWitness:
    chk = check_chordal(g)
    if not chk.is_chordal:
        hole = find_hole(g, chk.witness)
        return NonIntervalWitness(hole.vertices, "hole", hole)
    model = _chordal_model(g, chk.elimination)
    if model is not None:
        bad = interval_mismatch(g, model.lp, model.rp)
        if bad is not None:
            raise InternalError(f"interval model check failed: {bad}")
        return model
    vertices = minimalize_non_interval(g, range(g.n))
    return NonIntervalWitness(vertices, _kind(g, vertices))


def interval_model_or_none(g: Graph) -> IntervalModel | None:
    """A verified interval model, or None (no witness is computed)."""
    chk = check_chordal(g)
    if not chk.is_chordal:
        return None
    model = _chordal_model(g, chk.elimination)
    if model is not None:
        bad = interval_mismatch(g, model.lp, model.rp)
        if bad is not None:
            raise InternalError(f"interval model check failed: {bad}")
    return model
