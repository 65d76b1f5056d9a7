"""Independent ground truth for small graphs, and random NHCA generators.

``oracle_nhca`` searches every induced subgraph for a catalog member.
``exact_nhca`` decides membership from the definition alone: a Helly model
puts one point in every maximal clique, so a graph is NHCA exactly when some
circular order of its maximal cliques has every vertex on a contiguous run
and the tightest arcs over that order leave no cover by three or fewer arcs.
``oracle_model_enum`` enumerates endpoint orders outright for n <= 5.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .catalog import FINITE, FisWitness, catalog_graph, classify_fis
from .graph import Graph, GraphError

ORACLE_LIMIT = 10
ENUM_LIMIT = 5


@dataclass(frozen=True)
class OracleVerdict:
    is_nhca: bool
    witness: FisWitness | None = None


# catalog search ------------------------------------------------------------------

def _finite_profiles() -> dict[tuple[int, int], set[tuple[int, ...]]]:
    out: dict[tuple[int, int], set[tuple[int, ...]]] = {}
    for tag in FINITE:
        g = catalog_graph(tag)
        out.setdefault((g.n, g.m), set()).add(tuple(sorted(g.degrees().tolist())))
    return out


def _plausible(size: int, edges: int, degs: tuple[int, ...], finite) -> bool:
    if degs in finite.get((size, edges), ()):
        return True
    k = size - 1
    if k >= 4 and edges == k and degs == (0,) + (2,) * k:
        return True
    if k >= 4 and edges == 2 * k and degs == (3,) * k + (k,):
        return True
    if size >= 6 and edges == 2 * size - 6 and degs[:3] == (1, 1, 1):
        return True
    if size >= 6 and edges == 3 * size - 9 and degs[:3] == (2, 2, 2):
        return True
    return False


def oracle_nhca(g: Graph) -> OracleVerdict:
    """Smallest catalog member found among all induced subgraphs (n <= 10)."""
    n = g.n
    if n > ORACLE_LIMIT:
        raise GraphError(f"oracle limited to {ORACLE_LIMIT} vertices")
    adj = [0] * n
    for u, v in g.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    finite = _finite_profiles()
    full = 1 << n
    ecount = [0] * full
    for mask in range(1, full):
        low = mask & -mask
        v = low.bit_length() - 1
        ecount[mask] = ecount[mask ^ low] + bin(adj[v] & mask).count("1")
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(full):
        by_size[bin(mask).count("1")].append(mask)
    for size in range(5, n + 1):
        for mask in by_size[size]:
            e = ecount[mask]
            verts = [v for v in range(n) if mask >> v & 1]
            degs = tuple(sorted(bin(adj[v] & mask).count("1") for v in verts))
            if not _plausible(size, e, degs, finite):
                continue
            w = classify_fis(g, verts)
            if w is not None:
                return OracleVerdict(False, w)
    return OracleVerdict(True, None)


# definition-level decision via clique orders -----------------------------------

def maximal_cliques_small(g: Graph) -> list[int]:
    """Maximal cliques as bitmasks (Bron-Kerbosch with pivoting)."""
    adj = [0] * g.n
    for u, v in g.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    out: list[int] = []

    def bk(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot = max((u for u in range(g.n) if (p | x) >> u & 1),
                    key=lambda u: bin(adj[u] & p).count("1"))
        cand = p & ~adj[pivot]
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            bk(r | low, p & adj[u], x & adj[u])
            p &= ~low
            x |= low
            cand &= ~low

    if g.n:
        bk(0, (1 << g.n) - 1, 0)
    return sorted(out)


def _transitions(bits: list[int]) -> int:
    return sum(1 for a, b in zip(bits, bits[1:]) if a != b)


def _order_has_no_cover(k: int, spans: list[tuple[int, int] | None], universal: list[int]) -> bool:
    """Tightest arcs over a circular clique order; True if no <= 3 arcs cover."""
    # element 2i is clique point i, element 2i+1 the gap after it
    base = []
    for sp in spans:
        if sp is None:
            continue
        a, b = sp
        length = (b - a) % k
        base.append(sum(1 << ((2 * (a + j)) % (2 * k)) for j in range(length + 1))
                    | sum(1 << ((2 * (a + j) + 1) % (2 * k)) for j in range(length)))
    whole = (1 << (2 * k)) - 1
    for skip in range(k if universal else 1):
        arcs = list(base)
        if universal:
            arcs.extend([whole & ~(1 << (2 * skip + 1))] * len(universal))
        bad = False
        for r in (1, 2, 3):
            for combo in itertools.combinations(range(len(arcs)), r):
                acc = 0
                for i in combo:
                    acc |= arcs[i]
                if acc == whole:
                    bad = True
                    break
            if bad:
                break
        if not bad:
            return True
    return False


def exact_nhca(g: Graph) -> bool:
    """Decide NHCA membership from the definition (small graphs only)."""
    if g.n > ORACLE_LIMIT + 2:
        raise GraphError("exact test limited to small graphs")
    if g.n <= 1:
        return True
    cliques = maximal_cliques_small(g)
    k = len(cliques)
    member = [[i for i, c in enumerate(cliques) if c >> v & 1] for v in range(g.n)]
    universal = [v for v in range(g.n) if len(member[v]) == k]
    order = [0]
    used = [False] * k
    used[0] = True

    def spans_for(order):
        pos = {c: i for i, c in enumerate(order)}
        out = []
        for v in range(g.n):
            if len(member[v]) == k:
                out.append(None)
                continue
            bits = [0] * k
            for c in member[v]:
                bits[pos[c]] = 1
            # start = first clique after a non-member going clockwise
            start = next(i for i in range(k) if bits[i] and not bits[i - 1])
            out.append((start, (start + len(member[v]) - 1) % k))
        return out

    member_sets = [set(m) for m in member]

    def ok_prefix(order):
        # each vertex's cliques must end up on one circular run
        placed = set(order)
        for v in range(g.n):
            bits = [1 if c in member_sets[v] else 0 for c in order]
            t = _transitions(bits)
            if t > 2:
                return False
            if t == 2:
                if bits[0] == 0 and not member_sets[v] <= placed:
                    return False
                if bits[0] == 1 and len(placed - member_sets[v]) < k - len(member_sets[v]):
                    return False
        return True

    def extend():
        if len(order) == k:
            return ok_prefix(order) and _order_has_no_cover(k, spans_for(order), universal)
        for c in range(1, k):
            if used[c]:
                continue
            order.append(c)
            used[c] = True
            if ok_prefix(order) and extend():
                return True
            used[c] = False
            order.pop()
        return False

    return extend()


# endpoint enumeration ------------------------------------------------------------

def oracle_model_enum(g: Graph):
    """First endpoint order realizing ``g`` with no <= 3 arc cover, or None.

    Tokens are (v, 0) for the counterclockwise end and (v, 1) for the
    clockwise end; the sequence is read clockwise from point 0 and always
    starts with vertex 0's counterclockwise end, which fixes the rotation.
    Returns a CircularArcModel with endpoints i/(2n), or None.
    """
    from .arcmodel import CircularArcModel

    n = g.n
    if n > ENUM_LIMIT:
        raise GraphError(f"model enumeration limited to {ENUM_LIMIT} vertices")
    if n == 0:
        return CircularArcModel(np.zeros(0, np.int64), np.zeros(0, np.int64), 1)
    size = 2 * n
    pos = [[-1, -1] for _ in range(n)]
    adj = [[g.has_edge(u, v) for v in range(n)] for u in range(n)]

    def points(v):
        a, b = pos[v]
        length = (b - a) % size
        return {(a + j) % size for j in range(length + 1)}

    def gaps(v):
        a, b = pos[v]
        length = (b - a) % size
        return {(a + j) % size for j in range(length)}

    done: list[int] = []

    def consistent(v):
        pv = points(v)
        for u in done:
            if u != v and bool(pv & points(u)) != adj[u][v]:
                return False
        return True

    def no_cover():
        arcs = [gaps(v) for v in range(n)]
        for r in (1, 2, 3):
            for combo in itertools.combinations(range(n), r):
                if len(set().union(*(arcs[i] for i in combo))) == size:
                    return False
        return True

    def place(i):
        if i == size:
            return no_cover()
        for v in range(n):
            for end in (0, 1):
                if pos[v][end] != -1:
                    continue
                if i == 0 and (v, end) != (0, 0):
                    continue
                pos[v][end] = i
                closed = pos[v][1 - end] != -1
                if closed:
                    done.append(v)
                    ok = consistent(v)
                else:
                    ok = True
                if ok and place(i + 1):
                    return True
                if closed:
                    done.pop()
                pos[v][end] = -1
        return False

    if not place(0):
        return None
    ccw = np.array([pos[v][0] + 1 for v in range(n)], dtype=np.int64)
    cw = np.array([pos[v][1] + 1 for v in range(n)], dtype=np.int64)
    return CircularArcModel(ccw, cw, size)


# generators ----------------------------------------------------------------------

def arcs_intersection_graph(start: np.ndarray, length: np.ndarray, circ: float = 1.0) -> Graph:
    """Intersection graph of arcs ``[start, start + length]`` on a circle."""
    n = len(start)
    s = np.mod(start, circ)
    e = s + length
    # cut wrapping arcs into two pieces on [0, circ)
    wrap = e > circ
    ps = np.concatenate([s, np.zeros(int(wrap.sum()))])
    pe = np.concatenate([np.minimum(e, circ), e[wrap] - circ])
    owner = np.concatenate([np.arange(n), np.nonzero(wrap)[0]])
    order = np.argsort(ps, kind="stable")
    ps, pe, owner = ps[order], pe[order], owner[order]
    hi = np.searchsorted(ps, pe, side="right")
    cnt = hi - np.arange(len(ps)) - 1
    src = np.repeat(np.arange(len(ps)), cnt)
    offs = np.arange(len(src)) - np.repeat(np.cumsum(cnt) - cnt, cnt)
    dst = src + 1 + offs
    a, b = owner[src], owner[dst]
    keep = a != b
    a, b = np.minimum(a[keep], b[keep]), np.maximum(a[keep], b[keep])
    key = np.unique(a * n + b)
    return Graph.from_edges(n, np.stack([key // n, key % n], axis=1))


def _cover_triple(start, length) -> list[int] | None:
    """Indices of <= 3 arcs covering the unit circle, or None (small n)."""
    n = len(start)
    for r in (1, 2, 3):
        for combo in itertools.combinations(range(n), r):
            if sum(length[i] for i in combo) < 1.0:
                continue
            segs = sorted((start[i] % 1.0, start[i] % 1.0 + length[i]) for i in combo)
            if _covers(segs):
                return list(combo)
    return None


def _covers(segs) -> bool:
    # circle covered iff the unwrapped pieces cover [0, 1)
    pieces = []
    for a, b in segs:
        if b > 1.0:
            pieces.append((a, 1.0))
            pieces.append((0.0, b - 1.0))
        else:
            pieces.append((a, b))
    pieces.sort()
    reach = 0.0
    for a, b in pieces:
        if a > reach:
            return False
        reach = max(reach, b)
    return reach >= 1.0


def gen_random_nhca(seed: int, n: int, avg_degree: float | None = None,
                    cover: bool | None = None) -> Graph:
    """Intersection graph of random arcs with no cover by three or fewer arcs.

    With ``cover`` the arcs include a ring of 4..8 backbone arcs around the
    whole circle (so the graph has a hole); arcs shorter than a third of the
    circle can never cover it in threes.  Small instances also get a few long
    arcs, shortened until no cover remains.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    if cover is None:
        cover = bool(rng.random() < 0.7) and n >= 4
    if avg_degree is None:
        avg_degree = float(rng.uniform(1.0, min(6.0, max(1.0, n - 1))))
    ring = int(min(n, rng.integers(4, 9))) if cover else 0
    if ring < 4:
        ring = 0
    free = n - ring
    mean_len = min(0.3, avg_degree / (2.0 * max(n, 1)))
    start = rng.random(free)
    length = rng.uniform(0.0, 2.0 * mean_len, free)
    length = np.minimum(length, 0.33)
    if ring:
        base = rng.random()
        step = 1.0 / ring
        rs = base + step * np.arange(ring) + rng.uniform(-0.1, 0.1, ring) * step
        rl = step * rng.uniform(1.1, 1.3, ring) + 0.2 * step
        rl = np.minimum(rl, 0.33)
        # consecutive ring arcs must overlap
        nxt = np.roll(rs, -1) + np.where(np.arange(ring) == ring - 1, 1.0, 0.0)
        rl = np.maximum(rl, nxt - rs + 1e-3)
        start = np.concatenate([rs, start])
        length = np.concatenate([rl, length])
    if n <= 40 and free > 0 and rng.random() < 0.5:
        k = int(rng.integers(1, min(4, free) + 1))
        idx = rng.choice(np.arange(ring, n), size=k, replace=False)
        length[idx] = rng.uniform(0.33, 0.7, k)
        for _ in range(200):
            bad = _cover_triple(start.tolist(), length.tolist())
            if bad is None:
                break
            j = max(bad, key=lambda i: length[i])
            length[j] *= 0.8
    if n <= 40 and _cover_triple(start.tolist(), length.tolist()) is not None:
        raise AssertionError("generator failed to remove a cover")
    perm = rng.permutation(n)
    g = arcs_intersection_graph(start[perm], length[perm])
    return g


def gen_cycle_with_trees(seed: int, n: int, cycle_frac: float = 0.5) -> Graph:
    """A cycle with random trees hanging from it (n vertices in total)."""
    rng = random.Random(seed)
    k = max(4, int(n * cycle_frac))
    edges = [(i, (i + 1) % k) for i in range(k)]
    for v in range(k, n):
        edges.append((rng.randrange(v), v))
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[a], perm[b]) for a, b in edges])


def gen_random_graph(seed: int, n: int, p: float | None = None) -> Graph:
    rng = random.Random(seed)
    if p is None:
        p = rng.random()
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)
