"""Everything anchored on a hole H of the input.

Positions on H are taken mod k = |H|, with +1 the clockwise direction.  For a
vertex v, N_H[v] is the set of hole vertices equal or adjacent to v; when it
induces a proper sub-path its ends are ``tail`` (counterclockwise) and
``head`` (clockwise) in the canonical window: ``-k < tail <= 0 <= head`` if
h_0 is on the path, else ``0 < tail <= head < k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .catalog import FisWitness
from .chordal import Hole, InternalError, is_hole
from .fis import STATS, WitnessFailure, emit
from .graph import Graph


@dataclass(frozen=True, eq=False)
class HoleProjection:
    hole: Hole
    hidx: np.ndarray  # position on the hole, -1 off the hole
    tail: np.ndarray
    head: np.ndarray

    @property
    def k(self) -> int:
        return self.hole.k

    def h(self, i: int) -> int:
        return self.hole[i]

    def size(self, v: int) -> int:
        return int(self.head[v] - self.tail[v]) + 1

    def meets(self, v: int, i: int) -> bool:
        """Is h_i in N_H[v]?"""
        t = int(self.tail[v])
        return (i - t) % self.k <= int(self.head[v]) - t

    def span(self, v: int) -> list[int]:
        return [self.hole[i] for i in range(int(self.tail[v]), int(self.head[v]) + 1)]

    def mirrored(self) -> "HoleProjection":
        k = self.k
        t, hd = self.tail, self.head
        at0 = t <= 0
        nt = np.where(at0, -hd, k - hd)
        nh = np.where(at0, -t, k - t)
        hidx = np.where(self.hidx >= 0, (-self.hidx) % k, -1)
        return HoleProjection(self.hole.mirrored(), hidx, nt, nh)


def _canonical(k: int, ind: list[int]) -> tuple[int, int] | None:
    """(tail, head) when the sorted positions form a proper circular run."""
    if not ind or len(ind) >= k:
        return None
    gaps = [i for i in range(len(ind) - 1) if ind[i + 1] - ind[i] > 1]
    if not gaps:
        return (ind[0], ind[-1]) if ind[0] > 0 else (0, ind[-1])
    if len(gaps) == 1 and ind[0] == 0 and ind[-1] == k - 1:
        j = gaps[0]
        return ind[j + 1] - k, ind[j]
    return None


def _positions(g: Graph, hole: Hole, v: int, where: dict[int, int]) -> list[int]:
    ind = [where[u] for u in g.adj[v] if u in where]
    if v in where:
        ind.append(where[v])
    return sorted(ind)


def project_vertex(g: Graph, hole: Hole, v: int) -> tuple[int, int] | FisWitness:
    where = hole.index()
    ind = _positions(g, hole, v, where)
    tp = _canonical(hole.k, ind)
    return tp if tp is not None else lemma2_fis(g, hole, v, ind)


def lemma2_fis(g: Graph, hole: Hole, v: int, ind: list[int]) -> FisWitness:
    """N_H[v] is not a proper sub-path: build the forbidden subgraph."""
    k = hole.k
    H = list(hole.vertices)
    STATS["lemma2"] += 1
    if not ind:
        return emit(g, H + [v], "C-star")
    if len(ind) == k:
        return emit(g, H + [v], "wheel")
    gaps = [(ind[i], ind[i + 1]) for i in range(len(ind) - 1) if ind[i + 1] - ind[i] > 1]
    if ind[-1] < k - 1 or ind[0] > 0:
        gaps.append((ind[-1], ind[0] + k))
    if len(gaps) < 2:
        raise InternalError("lemma 2 called on a proper sub-path")
    (p1, p2), (p3, p4) = gaps[0], gaps[1]
    near = set(ind)

    def adj(i: int) -> bool:
        return i % k in near

    if p2 - p1 > 3:
        return emit(g, [v] + [hole[i] for i in range(p3, p4 + 1)] + [hole[p1 + 2]], "C-star")
    for ell in range(p2 + 2, p1 - 1 + k):
        if not adj(ell):
            return emit(g, [v] + [hole[i] for i in range(p1, p2 + 1)] + [hole[ell]], "C-star")
    # orient so that v is not adjacent to the vertex just before the gap
    base, sgn = (p2, -1) if adj(p1 - 1) else (p1, 1)

    def f(t: int) -> int:
        return hole[base + sgn * t]

    d = p2 - p1
    if d == 2:
        if k == 4:
            return emit(g, H + [v], "K23")
        if k == 5:
            return emit(g, H + [v], "twin-C5" if len(ind) == 2 else "FIS-1")
        return emit(g, [f(-2), f(-1), f(0), f(1), f(2), v], "domino")
    if k == 5:
        return emit(g, H + [v], "twin-C5")
    if k == 6 and not adj(base + sgn * (d + 1)):
        return emit(g, H + [v], "FIS-2")
    return emit(g, [v, f(0), f(-1), f(-2), f(d - 1)], "C-star")


def project_all(g: Graph, hole: Hole) -> HoleProjection | FisWitness:
    """Projections of every vertex; the first vertex (by id) without one
    yields a forbidden subgraph."""
    n, k = g.n, hole.k
    hv = np.asarray(hole.vertices, dtype=np.int64)
    hidx = np.full(n, -1, dtype=np.int64)
    hidx[hv] = np.arange(k)
    src = np.repeat(np.arange(n, dtype=np.int64), np.diff(g.indptr))
    sel = hidx[g.indices] >= 0
    pv = np.concatenate([src[sel], hv])
    pi = np.concatenate([hidx[g.indices[sel]], np.arange(k)])
    order = np.lexsort((pi, pv))
    pv, pi = pv[order], pi[order]
    cnt = np.bincount(pv, minlength=n)
    first = np.full(n, -1, np.int64)
    last = np.full(n, -1, np.int64)
    # lexsorted: the last write wins, so write reversed for the minimum
    first[pv[::-1]] = pi[::-1]
    last[pv] = pi
    same = pv[1:] == pv[:-1]
    gap = same & (pi[1:] - pi[:-1] > 1)
    ngaps = np.bincount(pv[1:][gap], minlength=n)
    gap_lo = np.zeros(n, np.int64)
    gap_hi = np.zeros(n, np.int64)
    gidx = np.nonzero(gap)[0]
    gap_lo[pv[gidx]] = pi[gidx]
    gap_hi[pv[gidx]] = pi[gidx + 1]
    wraps = (ngaps == 1) & (first == 0) & (last == k - 1)
    good = (cnt >= 1) & (cnt < k) & ((ngaps == 0) | wraps)
    if not np.all(good):
        v = int(np.argmin(good))
        ind = sorted(int(x) for x in pi[pv == v])
        return lemma2_fis(g, hole, v, ind)
    tail = np.where(wraps, gap_hi - k, np.where(first == 0, 0, first))
    head = np.where(wraps, gap_lo, last)
    return HoleProjection(hole, hidx, tail, head)


def normalize_hole(g: Graph, hole: Hole) -> tuple[Hole, HoleProjection] | FisWitness:
    """Shortcut the hole through vertices that see h_{-1}, h_0, h_1 and more.

    Returns the new hole with its projections.  The greedy scan keeps the
    widest such span; one pass suffices in theory, and the loop re-checks.
    """
    while True:
        proj = project_all(g, hole)
        if isinstance(proj, FisWitness):
            return proj
        k = hole.k
        t, hd = proj.tail, proj.head
        cand = np.nonzero((t <= -1) & (hd >= 1) & ((t < -1) | (hd > 1)) & (proj.hidx < 0))[0]
        if len(cand) == 0:
            return hole, proj
        a, b, h = -1, 1, None
        for v in cand.tolist():
            tv, hv = int(t[v]), int(hd[v])
            if (tv < a and hv >= b) or (tv == a and hv > b):
                h, a, b = v, tv, hv
        if h is None:  # pragma: no cover - the first candidate always qualifies
            raise InternalError("normalization made no progress")
        STATS["normalize-round"] += 1
        hole = Hole((h,) + tuple(hole[i] for i in range(b, a + k + 1)))


# pairs of vertices with disjoint projections ------------------------------

class _Pair:
    """Two runs on the hole in one of the four symmetric labelings."""

    def __init__(self, hole: Hole, u, su, nu, v, sv, nv, flip=False):
        self.hole, self.flip = hole, flip
        self.u, self.su, self.nu = u, su, nu
        self.v, self.sv, self.nv = v, sv, nv
        k = hole.k
        self.k = k
        self.tu, self.hu = su, su + nu - 1
        self.tv, self.hv = sv, sv + nv - 1
        self.len1 = (self.tv - self.hu) % k
        self.len2 = (self.tu - self.hv) % k

    def h(self, i: int) -> int:
        return self.hole[-i if self.flip else i]

    def swapped(self) -> "_Pair":
        return _Pair(self.hole, self.v, self.sv, self.nv, self.u, self.su, self.nu, self.flip)

    def mirrored(self) -> "_Pair":
        k = self.k
        return _Pair(self.hole, self.u, (-self.hu) % k, self.nu, self.v, (-self.hv) % k, self.nv,
                     not self.flip)

    def seg(self, a: int, length: int) -> list[int]:
        return [self.h(a + i) for i in range(length + 1)]

    def v_meets(self, i: int) -> bool:
        return (i - self.tv) % self.k < self.nv


def _run(g: Graph, hole: Hole, proj: HoleProjection | None, x: int) -> tuple[int, int]:
    if proj is not None and proj.hole is hole:
        return int(proj.tail[x]) % hole.k, proj.size(x)
    tp = project_vertex(g, hole, x)
    if isinstance(tp, FisWitness):
        raise WitnessFailure("vertex without projection", list(hole.vertices) + [x])
    return tp[0] % hole.k, tp[1] - tp[0] + 1


def disjoint_pair_fis(g: Graph, hole: Hole, proj: HoleProjection | None, u: int, v: int) -> FisWitness:
    """u ~ v whose hole neighborhoods are disjoint proper sub-paths."""
    STATS["lemma3"] += 1
    su, nu = _run(g, hole, proj, u)
    sv, nv = _run(g, hole, proj, v)
    P = _Pair(hole, u, su, nu, v, sv, nv)
    if not g.has_edge(u, v) or P.len1 < 1 or P.len2 < 1 or nu + nv + P.len1 + P.len2 - 2 != P.k:
        raise WitnessFailure("disjoint pair precondition", list(hole.vertices) + [u, v])
    H = list(hole.vertices)
    k = P.k
    if P.len1 == 1 and P.len2 == 1:
        for Q in (P, P.swapped()):
            if Q.nu == 1:
                i = Q.tu
                return emit(g, [Q.h(i), Q.h(i - 1), Q.h(i + 1), u, v], "K23")
        if nu == 2 and nv == 2:
            return emit(g, H + [u, v], "C6-complement")
        for Q in (P, P.swapped()):
            if Q.nu == 2:
                i = Q.tu
                return emit(g, [Q.h(i - 1), Q.h(i), Q.h(i + 1), Q.h(i + 2), u, v], "FIS-1")
        return emit(g, [P.h(P.hu), P.h(P.tv), P.h(P.hv), P.h(P.tu), u, v], "domino")
    Q = P if P.len2 >= 2 else P.swapped()
    cyc = [Q.v, Q.u] + Q.seg(Q.hu, Q.len1)
    if Q.nu > 1 and Q.nv > 1:
        return emit(g, cyc + [Q.h(Q.hv + 1)], "C-star")
    if Q.len2 > 3:
        return emit(g, cyc + [Q.h(Q.hv + 2)], "C-star")
    if Q.len1 > 3:
        return emit(g, [Q.u, Q.v] + Q.seg(Q.hv, Q.len2) + [Q.h(Q.tv - 2)], "C-star")
    for Q in (P, P.swapped(), P.mirrored(), P.swapped().mirrored()):
        if Q.nu == 1 and Q.len2 >= 2:
            break
    else:  # pragma: no cover
        raise WitnessFailure("no labeling fits lemma 3", H + [u, v])
    if Q.len1 >= 2:
        if Q.nv > 1:
            nbh = Q.seg(Q.tv, Q.nv - 1)
            return emit(g, [Q.u, Q.v, Q.h(Q.tv - 1), Q.h(Q.hv + 1)] + nbh, "dagger-net")
        if k == 6:
            return emit(g, [x for x in H if x != Q.h(Q.tv)] + [u, v], "long-claw")
        return emit(g, H + [u, v], "twin-C5" if k == 4 else "FIS-2")
    i = Q.tu
    if Q.v_meets(i - 2):
        return emit(g, [Q.h(i - 2), Q.h(i - 1), Q.h(i), Q.h(i + 1), u, v],
                    "FIS-1" if k == 4 else "twin-C5")
    if k == 4:
        return emit(g, H + [u, v], "domino")
    return emit(g, [Q.u, Q.v, Q.h(Q.tv), Q.h(i), Q.h(i - 2)], "C-star")


# covers of the hole -----------------------------------------------------------

def _wheel_if_valid(g: Graph, cyc: list[int], hub: int) -> FisWitness | None:
    if hub in cyc or not is_hole(g, cyc):
        return None
    if not all(g.has_edge(hub, x) for x in cyc):
        return None
    return emit(g, cyc + [hub], "wheel")


def cover_to_wheel(g: Graph, hole: Hole, proj: HoleProjection | None, U) -> FisWitness:
    """Pairwise adjacent vertices whose neighborhoods cover H give a wheel."""
    STATS["lemma4"] += 1
    U = list(dict.fromkeys(int(x) for x in U))
    k = hole.k
    runs = {x: _run(g, hole, proj, x) for x in U}
    for a, b in permutations(U, 2):
        sa, na = runs[a]
        cyc = [a] + [hole[i] for i in range(sa + na - 1, sa + k + 1)]
        w = _wheel_if_valid(g, cyc, b)
        if w is not None:
            return w
    if len(U) == 3:
        for a, b, c in permutations(U, 3):
            sa, _ = runs[a]
            sb, nb = runs[b]
            hb = sb + nb - 1
            length = (sa - hb) % k
            cyc = [a, b] + [hole[hb + i] for i in range(length + 1)]
            w = _wheel_if_valid(g, cyc, c)
            if w is not None:
                return w
    raise WitnessFailure("cover set does not yield a wheel", list(hole.vertices) + U)
