"""The auxiliary graph obtained by cutting the circle open at h_0.

T = N[h_0] is duplicated into a left copy L and a right copy R, the rest
(T̄) is kept once, and a simplicial vertex w is attached to the left copies
of T_cc.  Edges between T and T̄ go to L when clockwise (E_c) and to R when
counterclockwise (E_cc).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .catalog import FisWitness
from .fis import STATS, WitnessFailure, emit, within
from .graph import Graph
from .holeframe import HoleProjection, cover_to_wheel, disjoint_pair_fis

TBAR, LEFT, RIGHT, W = 0, 1, 2, 3
SIDE_NAMES = {TBAR: "Tbar", LEFT: "L", RIGHT: "R", W: "w"}


@dataclass(frozen=True, eq=False)
class AuxGraph:
    g: Graph
    proj: HoleProjection
    omega: Graph
    phi: np.ndarray  # omega vertex -> g vertex, -1 for w
    side: np.ndarray  # TBAR / LEFT / RIGHT / W
    in_T: np.ndarray  # bool per g vertex
    lid: np.ndarray  # g vertex -> id of its left copy (-1 off T)
    rid: np.ndarray
    tid: np.ndarray  # g vertex -> id in omega when in T̄ (-1 otherwise)
    cw_mate: np.ndarray  # v in T -> some u with uv in E_c (-1 if v not in T_c)
    ccw_mate: np.ndarray
    w: int

    @property
    def T(self) -> np.ndarray:
        return np.nonzero(self.in_T)[0]

    @property
    def Tbar(self) -> np.ndarray:
        return np.nonzero(~self.in_T)[0]

    @property
    def Tc(self) -> np.ndarray:
        return np.nonzero(self.cw_mate >= 0)[0]

    @property
    def Tcc(self) -> np.ndarray:
        return np.nonzero(self.ccw_mate >= 0)[0]

    def copy_of(self, v: int, which: int) -> int:
        if which == LEFT:
            return int(self.lid[v])
        if which == RIGHT:
            return int(self.rid[v])
        return int(self.tid[v])

    def to_dot(self) -> str:
        lines = ["graph omega {"]
        for x in range(self.omega.n):
            s = int(self.side[x])
            label = "w" if s == W else f"g:{int(self.phi[x])}/{SIDE_NAMES[s]}"
            lines.append(f'  {x} [label="{label}"];')
        for a, b in self.omega.edges():
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def classify_edge(g: Graph, proj: HoleProjection, v: int, u: int) -> str | FisWitness:
    """Direction of the edge from v in T to u in T̄."""
    k = proj.k
    tu, hu = int(proj.tail[u]), int(proj.head[u])
    tv, hv = int(proj.tail[v]), int(proj.head[v])
    cw = tu <= hv
    ccw = hu >= tv + k
    if cw and ccw:
        return cover_to_wheel(g, proj.hole, proj, [u, v])
    if not cw and not ccw:
        return disjoint_pair_fis(g, proj.hole, proj, u, v)
    return "clockwise" if cw else "counterclockwise"


def build_aux(g: Graph, proj: HoleProjection) -> AuxGraph | FisWitness:
    n, k = g.n, proj.k
    h0 = proj.h(0)
    in_T = np.zeros(n, dtype=np.bool_)
    in_T[np.asarray(g.adj[h0], dtype=np.int64)] = True
    in_T[h0] = True
    src = np.repeat(np.arange(n, dtype=np.int64), np.diff(g.indptr))
    dst = g.indices
    tail, head = proj.tail, proj.head

    # T–T̄ edges as (v in T, u in T̄), in CSR order
    sel = in_T[src] & ~in_T[dst]
    ev, eu = src[sel], dst[sel]
    cw = tail[eu] <= head[ev]
    ccw = head[eu] >= tail[ev] + k
    odd = cw == ccw
    if np.any(odd):
        i = int(np.argmax(odd))
        return classify_edge(g, proj, int(ev[i]), int(eu[i]))

    nT = int(in_T.sum())
    nB = n - nT
    tid = np.full(n, -1, np.int64)
    lid = np.full(n, -1, np.int64)
    rid = np.full(n, -1, np.int64)
    tbar = np.nonzero(~in_T)[0]
    tset = np.nonzero(in_T)[0]
    tid[tbar] = np.arange(nB)
    lid[tset] = nB + np.arange(nT)
    rid[tset] = nB + nT + np.arange(nT)
    w = nB + 2 * nT

    cw_mate = np.full(n, -1, np.int64)
    ccw_mate = np.full(n, -1, np.int64)
    # reversed writes so the first partner in CSR order wins
    cw_mate[ev[cw][::-1]] = eu[cw][::-1]
    ccw_mate[ev[~cw][::-1]] = eu[~cw][::-1]

    up = src < dst
    bb = up & ~in_T[src] & ~in_T[dst]
    tt = up & in_T[src] & in_T[dst]
    tcc = np.nonzero(ccw_mate >= 0)[0]
    parts = [
        np.stack([tid[src[bb]], tid[dst[bb]]], 1),
        np.stack([lid[src[tt]], lid[dst[tt]]], 1),
        np.stack([rid[src[tt]], rid[dst[tt]]], 1),
        np.stack([tid[eu[cw]], lid[ev[cw]]], 1),
        np.stack([tid[eu[~cw]], rid[ev[~cw]]], 1),
        np.stack([np.full(len(tcc), w, np.int64), lid[tcc]], 1),
    ]
    omega = Graph.from_edges(w + 1, np.concatenate(parts))
    phi = np.concatenate([tbar, tset, tset, [-1]]).astype(np.int64)
    side = np.concatenate([np.full(nB, TBAR), np.full(nT, LEFT), np.full(nT, RIGHT), [W]]).astype(np.int64)
    STATS["aux-built"] += 1
    return AuxGraph(g, proj, omega, phi, side, in_T, lid, rid, tid, cw_mate, ccw_mate, int(w))


# sector cliques -----------------------------------------------------------------

def _non_clique_pair(g: Graph, members: np.ndarray) -> tuple[int, int] | None:
    s = len(members)
    if s < 2:
        return None
    mark = np.zeros(g.n, dtype=np.bool_)
    mark[members] = True
    src = np.repeat(np.arange(g.n, dtype=np.int64), np.diff(g.indptr))
    both = mark[src] & mark[g.indices]
    deg_in = np.bincount(src[both], minlength=g.n)[members]
    short = deg_in < s - 1
    if not np.any(short):
        return None
    u = int(members[int(np.argmax(short))])
    nb = g.nset(u)
    for x in members.tolist():
        if x != u and x not in nb:
            return (min(u, x), max(u, x))
    raise WitnessFailure("clique count inconsistent")  # pragma: no cover


def _resolve(g: Graph, verts, expect: str | None = None) -> FisWitness:
    try:
        return emit(g, verts, expect)
    except WitnessFailure:
        return within(g, verts, expect)


def _sector_fis(g: Graph, proj: HoleProjection, u: int, x: int, v: int, y: int) -> FisWitness:
    """u, x nonadjacent in T_cc with uv, xy in E_cc."""
    h = proj.h
    adj = g.has_edge
    STATS["lemma7"] += 1
    if adj(u, h(1)) and adj(x, h(1)):
        return emit(g, [u, h(-1), x, h(1), h(0)], "wheel")
    if adj(x, h(1)):
        u, x, v, y = x, u, y, v
    if adj(u, h(1)):
        if adj(v, h(0)) or adj(v, h(1)):
            return cover_to_wheel(g, proj.hole, proj, [u, v])
        return _resolve(g, [h(0), h(1), h(2), u, v, x])
    return _resolve(g, [h(0), h(1), h(2), u, v, x, y])


def check_sector_cliques(g: Graph, aux: AuxGraph) -> FisWitness | None:
    for mates, proj in ((aux.ccw_mate, aux.proj), (aux.cw_mate, None)):
        members = np.nonzero(mates >= 0)[0]
        pair = _non_clique_pair(g, members)
        if pair is None:
            continue
        u, x = pair
        if proj is None:
            proj = aux.proj.mirrored()
        return _sector_fis(g, proj, u, x, int(mates[u]), int(mates[x]))
    return None


# v^l - v^r paths of length three ----------------------------------------------------

def _both_outside(g, f: HoleProjection, v, x, y) -> FisWitness:
    k = f.k
    if f.meets(x, -1):
        return cover_to_wheel(g, f.hole, f, [v, x])
    if int(f.head[x]) < int(f.tail[y]):
        return disjoint_pair_fis(g, f.hole, f, x, y)
    cyc = [v, x] + [f.h(i) for i in range(int(f.head[x]), k)]
    return emit(g, cyc + [y], "wheel")


def _one_copy(g, f: HoleProjection, v, x, u) -> FisWitness:
    """x in T̄ with vx clockwise and ux counterclockwise, u ~ v both in T."""
    k = f.k
    hv, tu = int(f.head[v]), int(f.tail[u])
    if hv < tu + k:
        cyc = [v] + [f.h(i) for i in range(hv, tu + k + 1)] + [u]
        try:
            return emit(g, cyc + [x], "wheel")
        except WitnessFailure:
            pass
    for U in ([v, u], [v, u, x]):
        try:
            return cover_to_wheel(g, f.hole, f, U)
        except WitnessFailure:
            pass
    raise WitnessFailure("length-3 path case", list(f.hole.vertices) + [v, x, u])


def short_path_fis(g: Graph, aux: AuxGraph, P) -> FisWitness:
    """P = (v^l, x, y, v^r), an induced path of the auxiliary graph."""
    p0, p1, p2, p3 = (int(t) for t in P)
    side, phi = aux.side, aux.phi
    if side[p0] != LEFT or side[p3] != RIGHT or phi[p0] != phi[p3]:
        raise ValueError("path must run from a left copy to the matching right copy")
    STATS["short-path"] += 1
    v = int(phi[p0])
    x, y = int(phi[p1]), int(phi[p2])
    if side[p1] == TBAR and side[p2] == TBAR:
        return _both_outside(g, aux.proj, v, x, y)
    if side[p1] == TBAR and side[p2] == RIGHT:
        return _one_copy(g, aux.proj, v, x, y)
    if side[p1] == LEFT and side[p2] == TBAR:
        return _one_copy(g, aux.proj.mirrored(), v, y, x)
    raise ValueError("inner path vertices must not both be copies")
