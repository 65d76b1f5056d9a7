"""From a minimal non-interval subgraph of the auxiliary graph to a minimal
forbidden induced subgraph of the input.

Each case builds the vertex set named by the corresponding lemma and
verifies it.  Cases whose answer is only known to lie inside a constant-size
set are resolved by exhaustive search inside that set.  Anything that fails
verification raises WitnessFailure with a vertex pool, and the driver hands
the pool to ``fallback_minimalize``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .auxgraph import LEFT, RIGHT, TBAR, W, AuxGraph, short_path_fis
from .catalog import FisWitness, catalog_graph, classify_fis, simplicial_vertices
from .chordal import Hole, InternalError, any_hole, is_hole
from .fis import STATS, WitnessFailure, emit, within
from .graph import Graph, find_isomorphism, induced_subgraph
from .holeframe import HoleProjection, disjoint_pair_fis
from .interval import NonIntervalWitness


@dataclass(frozen=True)
class BadPair:
    x: int
    y: int


@dataclass
class WitnessContext:
    aux: AuxGraph
    F: tuple[int, ...]  # omega vertices
    kind: str
    terminals: tuple[int, ...] = ()
    bad: list[BadPair] = field(default_factory=list)


def _phi(aux: AuxGraph, xs) -> list[int]:
    return [int(aux.phi[x]) for x in xs if int(aux.side[x]) != W]


def _pool(aux: AuxGraph, xs, extra=()) -> set[int]:
    return set(_phi(aux, xs)) | set(aux.proj.hole.vertices) | set(int(e) for e in extra)


def _local(g: Graph, verts, expect: str | None = None) -> FisWitness:
    try:
        return emit(g, verts, expect)
    except WitnessFailure:
        if len(set(verts)) > 10:
            raise
        return within(g, verts, expect)


def _frame(aux: AuxGraph, left_side: int) -> HoleProjection:
    return aux.proj if left_side == LEFT else aux.proj.mirrored()


# holes of the auxiliary graph -----------------------------------------------------

def _wheel_inside(g: Graph, pool, hub: int) -> FisWitness | None:
    """A hole among the neighbors of ``hub`` in ``pool`` gives a wheel."""
    nb = sorted(x for x in set(pool) if x != hub and g.has_edge(x, hub))
    if len(nb) < 4:
        return None
    sub, _ = induced_subgraph(g, nb)
    hole = any_hole(sub)
    if hole is None:
        return None
    return emit(g, [nb[i] for i in hole.vertices] + [hub], "wheel")


def _scan_disjoint(g: Graph, f: HoleProjection, seq) -> FisWitness | None:
    """First consecutive adjacent pair with disjoint hole neighborhoods."""
    k = f.k
    for a, b in zip(seq, seq[1:]):
        if a == b or not g.has_edge(a, b):
            continue
        if not any(f.meets(a, i) and f.meets(b, i) for i in range(k)):
            return disjoint_pair_fis(g, f.hole, f, a, b)
    return None


def non_bypass(aux: AuxGraph, P, i: int) -> FisWitness:
    """P runs from h_0^l to h_0^r in the auxiliary graph and avoids N[h_i]."""
    g, f = aux.g, aux.proj
    hi = f.h(i)
    if any(int(aux.phi[x]) == hi or g.has_edge(int(aux.phi[x]), hi) for x in P if aux.side[x] != W):
        raise ValueError("path meets the closed neighborhood of h_i")
    sides = [int(aux.side[x]) for x in P]
    first_out = next(j for j, s in enumerate(sides) if s == TBAR)
    last_out = max(j for j, s in enumerate(sides) if s == TBAR)
    seq = _phi(aux, P[first_out - 1:last_out + 2])
    STATS["non-bypass"] += 1
    found = _scan_disjoint(g, f, seq)
    if found is None:
        raise WitnessFailure("non-bypass scan found no disjoint pair", _pool(aux, P))
    return found


def extract_from_hole(aux: AuxGraph, C: Hole) -> FisWitness:
    g = aux.g
    cyc = [int(x) for x in C.vertices]
    if not is_hole(aux.omega, cyc):
        raise ValueError("not a hole of the auxiliary graph")
    STATS["omega-hole"] += 1
    sides = {int(aux.side[x]) for x in cyc}
    f = aux.proj
    h0 = f.h(0)
    if len(sides) == 1:
        img = _phi(aux, cyc)
        return emit(g, img + [h0], "C-star" if sides == {TBAR} else "wheel")
    img = _phi(aux, cyc)
    if len(set(img)) == len(img) and is_hole(g, img):
        # the image is already a hole of G: some frame vertex sees all or none of it
        for i in range(f.k):
            hi = f.h(i)
            if hi in img:
                continue
            hits = sum(1 for z in img if g.has_edge(z, hi))
            if hits in (0, len(img)):
                return emit(g, img + [hi], "C-star" if hits == 0 else "wheel")
    left = LEFT if LEFT in sides else RIGHT
    f = _frame(aux, left)
    k = len(cyc)
    j = next(j for j in range(k) if aux.side[cyc[j]] == left and aux.side[cyc[(j + 1) % k]] == TBAR)
    # walk x1 (copy), x2 (outside), x3, ... around the hole
    order = [cyc[(j + t) % k] for t in range(k)]
    img = _phi(aux, order)
    x1, x2 = img[0], img[1]
    a = int(f.head[x1])
    cand_pool = set(img)
    if x2 == f.h(a):
        x3 = img[2]
        if g.has_edge(x3, f.h(a - 2)):
            try:
                return emit(g, [x1, x2, x3, f.h(a - 2), f.h(a - 1)], "wheel")
            except WitnessFailure:
                pass
        hubs = [f.h(a - 1), f.h(a)]
        cand_pool |= {f.h(a - 2)}
    else:
        hubs = [f.h(a), f.h(a - 1), f.h(a + 1)]
    # the lemma's hubs first, then the rest of the frame between h_1 and h_{a+1}
    hubs += [f.h(i) for i in range(1, a + 2) if f.h(i) not in hubs]
    for hub in hubs:
        found = _wheel_inside(g, cand_pool, hub)
        if found is not None:
            return found
    found = _scan_disjoint(g, f, img + [img[0]])
    if found is None:
        found = _scan_cover(g, f, img)
    if found is not None:
        return found
    pool = _pool(aux, cyc)
    if len(pool) <= 10:
        return within(g, pool)
    raise WitnessFailure("hole case", pool)


def _covers_hole(f: HoleProjection, a: int, b: int) -> bool:
    k = f.k
    na, nb = f.size(a), f.size(b)
    gap_start = int(f.head[a]) + 1  # first hole position a misses
    return (gap_start - int(f.tail[b])) % k + (k - na) <= nb


def _scan_cover(g: Graph, f: HoleProjection, img) -> FisWitness | None:
    """Two adjacent vertices whose hole neighborhoods cover the hole."""
    from .holeframe import cover_to_wheel

    for i, a in enumerate(img):
        for b in img[i + 1:]:
            if a != b and g.has_edge(a, b) and _covers_hole(f, a, b):
                try:
                    return cover_to_wheel(g, f.hole, f, [a, b])
                except WitnessFailure:
                    continue
    return None


# chordal witnesses ---------------------------------------------------------------------

def _close(g: Graph, a: int, b: int) -> bool:
    return a == b or g.has_edge(a, b)


def find_bad_pairs(aux: AuxGraph, F) -> list[BadPair]:
    g, om = aux.g, aux.omega
    xs = [int(x) for x in F if int(aux.side[x]) != W]
    out = []
    for i, x in enumerate(xs):
        for y in xs[i + 1:]:
            if not om.has_edge(x, y) and _close(g, int(aux.phi[x]), int(aux.phi[y])):
                out.append(BadPair(min(x, y), max(x, y)))
    return out


def _bfs_in(om: Graph, F, s: int) -> dict[int, int]:
    inside = set(F)
    parent = {s: -1}
    q = deque([s])
    while q:
        x = q.popleft()
        for y in om.adj[x]:
            if y in inside and y not in parent:
                parent[y] = x
                q.append(y)
    return parent


def _path_in(om: Graph, F, s: int, t: int) -> list[int] | None:
    parent = _bfs_in(om, F, s)
    if t not in parent:
        return None
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    return path[::-1]


def _as_short_path(aux: AuxGraph, path: list[int]) -> list[int] | None:
    """Turn a length-2 bad-pair path (or a length-3 copy-to-copy path) into
    an induced v^l - v^r path of length 3."""
    side, phi, om = aux.side, aux.phi, aux.omega
    x, y = path[0], path[-1]
    if len(path) == 4:
        if side[x] == RIGHT:
            path = path[::-1]
        cand = path
    else:
        z = path[1]
        if side[y] == LEFT or (side[y] == RIGHT and side[x] == TBAR):
            x, y = y, x
        v = int(phi[x])
        if side[x] == LEFT:
            cand = [x, z, y, int(aux.rid[v])] if side[y] == TBAR or side[y] == RIGHT else None
        elif side[x] == RIGHT and side[y] == TBAR:
            cand = [int(aux.lid[v]), y, z, x]
        else:
            cand = None
    if cand is None:
        return None
    ok = all(om.has_edge(cand[i], cand[i + 1]) for i in range(3)) and not any(
        om.has_edge(cand[i], cand[j]) for i in range(4) for j in range(i + 2, 4))
    return cand if ok and side[cand[0]] == LEFT and side[cand[3]] == RIGHT else None


def _labels(aux: AuxGraph, F, tag: str) -> list[int] | None:
    sub, _ = induced_subgraph(aux.omega, list(F))
    f = find_isomorphism(catalog_graph(tag), sub)
    return None if f is None else [F[i] for i in f]


def _long_claw(aux: AuxGraph, F, x: int, y: int) -> FisWitness | None:
    g = aux.g
    lab = _labels(aux, F, "long-claw")
    if lab is None:
        return None
    c, u, t = lab[0], lab[1:4], lab[4:7]
    if x not in t:
        x, y = y, x
    i = t.index(x)
    if y not in u:
        return None
    j = u.index(y)
    ell = 3 - i - j
    P = _phi(aux, [t[i], u[i], c, u[j]])
    tl = int(aux.phi[t[ell]])
    if not any(g.has_edge(tl, p) for p in P):
        return emit(g, P + [tl], "C-star")
    return _local(g, P + [int(aux.phi[u[ell]]), tl])


def _whipping_top(aux: AuxGraph, F, bad: set) -> FisWitness | None:
    g = aux.g
    lab = _labels(aux, F, "whipping-top")
    if lab is None:
        return None
    t1, t2, t3, a, b, c, d = lab
    b13 = (min(t1, t3), max(t1, t3)) in bad
    b23 = (min(t2, t3), max(t2, t3)) in bad
    if b13 and b23:
        return emit(g, _phi(aux, [t1, t2, t3, b, c, d]), "domino")
    if b23:
        t1, t2, b, c = t2, t1, c, b
    if b13 or b23:
        return emit(g, _phi(aux, [t1, b, d, t3, t2]), "C-star")
    return None


def _net(aux: AuxGraph, F, x: int, y: int) -> FisWitness | None:
    g = aux.g
    lab = _labels(aux, F, "dagger-net")
    if lab is None:
        return None
    u, t = lab[0:3], lab[3:6]
    if x not in t or y not in t:
        return None
    i, j = t.index(x), t.index(y)
    ell = 3 - i - j
    P = _phi(aux, [t[i], u[i], u[j], t[j]])
    tl = int(aux.phi[t[ell]])
    if not any(_close(g, tl, p) for p in P):
        return emit(g, P + [tl], "C-star")
    return None


def _tent(aux: AuxGraph, F, x: int, y: int) -> FisWitness | None:
    g, om = aux.g, aux.omega
    sub, _ = induced_subgraph(om, list(F))
    terms = [F[i] for i in simplicial_vertices(sub)]
    if len(terms) != 3 or x not in terms or y not in terms:
        return None
    t3 = next(t for t in terms if t not in (x, y))
    avoid = set(om.adj[t3]) | {t3}
    P = _path_in(om, [z for z in F if z not in avoid], x, y)
    if P is None:
        return None
    return emit(g, _phi(aux, P) + [int(aux.phi[t3])], "C-star")


def extract_no_w(aux: AuxGraph, ctx: WitnessContext) -> FisWitness:
    g = aux.g
    F = list(ctx.F)
    STATS["at-no-w"] += 1
    if not ctx.bad:
        return emit(g, _phi(aux, F), ctx.kind)
    x, y = ctx.bad[0].x, ctx.bad[0].y
    found = None
    if ctx.kind == "long-claw":
        found = _long_claw(aux, F, x, y)
    elif ctx.kind == "whipping-top":
        found = _whipping_top(aux, F, {(p.x, p.y) for p in ctx.bad})
    elif ctx.kind == "dagger-net" and len(F) == 6:
        found = _net(aux, F, x, y)
    elif ctx.kind == "double-dagger" and len(F) >= 7:
        found = _tent(aux, F, x, y)
    if found is not None:
        return found
    img = _phi(aux, F)
    if len(set(img)) <= 10:
        STATS["at-local"] += 1
        return _local(g, img)
    raise WitnessFailure("no case fits the bad pairs", _pool(aux, F))


def extract_with_w(aux: AuxGraph, ctx: WitnessContext) -> FisWitness:
    g, om, f = aux.g, aux.omega, aux.proj
    F = list(ctx.F)
    STATS["at-with-w"] += 1
    xs = [z for z in F if om.has_edge(aux.w, z)]
    rest = _phi(aux, F)
    pool = _pool(aux, F, [int(aux.ccw_mate[int(aux.phi[z])]) for z in xs])
    if len(xs) != 2:
        # w is a terminal: a T̄ partner of its neighbor plays its role in G
        S = set(rest) | {int(aux.ccw_mate[int(aux.phi[z])]) for z in xs}
        if len(S) <= 10:
            STATS["at-with-w-substitute"] += 1
            try:
                return within(g, S)
            except WitnessFailure:
                pass
        raise WitnessFailure("w has one neighbor in the witness", pool)
    x1, x2 = (int(aux.phi[z]) for z in xs)
    common = sorted(set(g.adj[x1]) & set(g.adj[x2]) - set(np.nonzero(aux.in_T)[0].tolist()))
    if common:
        S = set(rest) | {common[0]}
        if len(S) <= 10:
            STATS["at-with-w-substitute"] += 1
            try:
                return within(g, S)
            except WitnessFailure:
                pass
        raise WitnessFailure("substituted witness too large", S | pool)
    y1, y2 = int(aux.ccw_mate[x1]), int(aux.ccw_mate[x2])
    if y1 == y2 or g.has_edge(y1, y2):
        raise WitnessFailure("partners of w's neighbors are adjacent", pool)
    h = f.h
    hx = {x1: int(f.head[x1]), x2: int(f.head[x2])}
    for xa, ya, xb, yb in ((x1, y1, x2, y2), (x2, y2, x1, y1)):
        c = hx[xa]
        if c in (0, 1) and g.has_edge(ya, h(c + 1)):
            hole = Hole((ya, xa, h(c), h(c + 1)))
            if is_hole(g, list(hole.vertices)):
                try:
                    return disjoint_pair_fis(g, hole, None, xb, yb)
                except WitnessFailure:
                    pass
    if hx[x1] == hx[x2]:
        c = hx[x1]
        return _local(g, [y1, x1, y2, x2, h(c), h(c + 1)], "dagger-net")
    if hx[x1] == 0:
        x1, x2, y1, y2 = x2, x1, y2, y1
    if g.has_edge(x2, h(2)):
        return _local(g, [x2, h(0), h(1), h(2), y1], "C-star")
    near = g.has_edge(y2, h(-1))
    tent = [y1, h(-1), x1, y2, x2, h(0), h(1)]
    net = [y1, h(-1), y2, x2, h(0), h(1)]
    for cand, fam in ((tent, "double-dagger"), (net, "dagger-net")) if near else \
            ((net, "dagger-net"), (tent, "double-dagger")):
        w = classify_fis(g, cand)
        if w is not None:
            return emit(g, cand, fam)
    return within(g, set(net) | set(tent))


def context_for(aux: AuxGraph, nw: NonIntervalWitness) -> WitnessContext:
    F = tuple(int(x) for x in nw.vertices)
    sub, _ = induced_subgraph(aux.omega, list(F))
    terms = tuple(F[i] for i in simplicial_vertices(sub))
    return WitnessContext(aux, F, nw.kind, terms)


def extract(aux: AuxGraph, nw: NonIntervalWitness) -> FisWitness:
    """Dispatch on the kind of non-interval witness of the auxiliary graph."""
    if nw.kind == "hole":
        return extract_from_hole(aux, nw.hole)
    ctx = context_for(aux, nw)
    om = aux.omega
    pairs = find_bad_pairs(aux, ctx.F)
    # order bad pairs by distance inside F (ties by ids)
    scored = []
    for p in pairs:
        path = _path_in(om, ctx.F, p.x, p.y)
        scored.append((len(path) - 1 if path else 99, p.x, p.y, path))
    scored.sort()
    ctx.bad = [BadPair(x, y) for _, x, y, _ in scored]
    if scored:
        d, x, y, path = scored[0]
        same = aux.phi[x] == aux.phi[y]
        if d == 2 or (d == 3 and same):
            P = _as_short_path(aux, path)
            if P is None:
                raise WitnessFailure("bad pair does not extend to a short path", _pool(aux, ctx.F))
            return short_path_fis(aux.g, aux, P)
        ctx.bad = [BadPair(x, y) for dd, x, y, _ in scored if dd == d]
    if aux.w in ctx.F:
        return extract_with_w(aux, ctx)
    return extract_no_w(aux, ctx)


# safety net ----------------------------------------------------------------------

def fallback_minimalize(g: Graph, s) -> FisWitness:
    """Delete vertices while the induced subgraph stays non-NHCA.

    Non-NHCA is decided by the recognition pipeline itself run in decision
    mode (no model can be built and verified).  A verified witness met on
    the way is returned at once.
    """
    from .driver import probe

    STATS["fallback"] += 1
    cur = sorted(set(int(x) for x in s))
    kind, w = probe(g, cur)
    if kind == "model":
        raise ValueError("vertex set induces a normal Helly circular-arc graph")
    if w is not None:
        return w
    chunk = max(1, len(cur) // 2)
    while True:
        i = 0
        while i < len(cur):
            trial = cur[:i] + cur[i + chunk:]
            kind, w = probe(g, trial) if trial else ("model", None)
            if kind != "model":
                if w is not None:
                    return w
                cur = trial
            else:
                i += chunk
        if chunk == 1:
            break
        chunk = max(1, chunk // 2)
    found = classify_fis(g, cur)
    if found is None:
        raise InternalError("fallback ended on a set outside the catalog")
    return found
