"""Catalog of minimal forbidden induced subgraphs for NHCA graphs.

Ten finite representatives are loaded from ``data/catalog.txt``.  Four
families are parameterized and recognized structurally: C-star (a hole plus
an isolated vertex), wheel (a hole plus a universal hub), and the two chordal
series of asteroidal graphs, the n-nets (tagged dagger-net, the 6-vertex net
is n=2) and the n-tents (tagged double-dagger, the 3-sun is n=3).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .chordal import is_chordal, is_hole
from .graph import Graph, GraphError, induced_subgraph, is_isomorphic_small

FINITE = ("long-claw", "whipping-top", "dagger-net", "double-dagger", "K23",
          "twin-C5", "domino", "C6-complement", "FIS-1", "FIS-2")
CHORDAL_FAMILIES = FINITE[:4]
FAMILIES = FINITE + ("C-star", "wheel")


class CatalogError(Exception):
    pass


@dataclass(frozen=True)
class FisWitness:
    """A forbidden induced subgraph of a host graph.

    ``vertices`` is sorted.  For C-star and wheel, ``hole`` lists the hole in
    cyclic order and ``apex`` is the isolated vertex or the hub.
    """

    family: str
    vertices: tuple[int, ...]
    hole: tuple[int, ...] | None = None
    apex: int | None = None

    def to_json(self) -> dict:
        out = {"family": self.family, "vertices": list(self.vertices)}
        if self.hole is not None:
            out["hole"] = list(self.hole)
            out["apex"] = self.apex
        return out


# data file ------------------------------------------------------------------

def _read_records(text: str) -> dict[str, Graph]:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("sha256 "):
        raise CatalogError("catalog data has no checksum line")
    digest = lines[0].split()[1]
    body = "".join(ln + "\n" for ln in lines[1:])
    if hashlib.sha256(body.encode()).hexdigest() != digest:
        raise CatalogError("catalog data checksum mismatch")
    out: dict[str, Graph] = {}
    i = 1
    while i < len(lines):
        tag, n, m = lines[i].split()
        n, m = int(n), int(m)
        edges = [tuple(map(int, ln.split())) for ln in lines[i + 1:i + 1 + m]]
        g = Graph.from_edges(n, edges)
        if g.m != m:
            raise CatalogError(f"{tag}: edge count mismatch")
        out[tag] = g
        i += 1 + m
    if set(out) != set(FINITE):
        raise CatalogError("catalog data does not list the ten finite families")
    return out


@lru_cache(maxsize=1)
def _records() -> dict[str, Graph]:
    text = resources.files("nhca").joinpath("data/catalog.txt").read_text()
    return _read_records(text)


def catalog_graph(tag: str) -> Graph:
    try:
        return _records()[tag]
    except KeyError:
        raise CatalogError(f"unknown finite family {tag!r}") from None


# parameterized families -------------------------------------------------------

def net_graph(n: int) -> Graph:
    """n-net: path x1..xn, c adjacent to every xi, pendants at x1, xn and c."""
    if n < 2:
        raise ValueError("n-net needs n >= 2")
    c, t1, t2, t3 = n, n + 1, n + 2, n + 3
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(i, c) for i in range(n)]
    edges += [(0, t1), (n - 1, t2), (c, t3)]
    return Graph.from_edges(n + 4, edges)


def tent_graph(n: int) -> Graph:
    """n-tent: path t1 q1..q_{n-2} t2, a and b over it, t3 on the edge ab."""
    if n < 3:
        raise ValueError("n-tent needs n >= 3")
    k = n - 2
    path = list(range(k + 2))  # t1 = 0, t2 = k + 1
    a, b, t3 = k + 2, k + 3, k + 4
    edges = [(i, i + 1) for i in range(k + 1)]
    edges += [(a, i) for i in range(k + 1)]
    edges += [(b, i) for i in range(1, k + 2)]
    edges += [(a, b), (a, t3), (b, t3)]
    return Graph.from_edges(len(path) + 3, edges)


def _path_order(sub: Graph, verts: set[int], ends: tuple[int, int] | None = None):
    """``verts`` in path order if they induce a path (between ``ends``), else None."""
    if not verts:
        return None
    deg = {v: sum(1 for u in sub.adj[v] if u in verts) for v in verts}
    if len(verts) == 1:
        return list(verts) if ends is None or ends[0] == ends[1] else None
    leaves = [v for v in verts if deg[v] == 1]
    if len(leaves) != 2 or any(deg[v] > 2 for v in verts):
        return None
    if ends is not None and set(leaves) != set(ends):
        return None
    start = ends[0] if ends is not None else leaves[0]
    order, prev = [start], -1
    while len(order) < len(verts):
        nxt = [u for u in sub.adj[order[-1]] if u in verts and u != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def _is_net(sub: Graph) -> bool:
    big = sub.n
    if big < 6 or sub.m != 2 * big - 6:
        return False
    pend = [v for v in range(big) if len(sub.adj[v]) == 1]
    if len(pend) != 3:
        return False
    anchors = [sub.adj[t][0] for t in pend]
    if len(set(anchors)) != 3:
        return False
    core = set(range(big)) - set(pend)
    for c in anchors:
        if any(not sub.has_edge(c, x) for x in core if x != c):
            continue
        ends = tuple(a for a in anchors if a != c)
        if _path_order(sub, core - {c}, ends) is not None:
            return True
    return False


def _is_tent(sub: Graph) -> bool:
    big = sub.n
    if big < 6 or sub.m != 3 * big - 9:
        return False
    for t3 in range(big):
        if len(sub.adj[t3]) != 2:
            continue
        a, b = sub.adj[t3]
        if not sub.has_edge(a, b):
            continue
        rest = set(range(big)) - {a, b, t3}
        path = _path_order(sub, rest)
        if path is None or len(path) < 3:
            continue
        for p in (path, path[::-1]):
            if (all(sub.has_edge(a, x) for x in p[:-1]) and not sub.has_edge(a, p[-1])
                    and all(sub.has_edge(b, x) for x in p[1:]) and not sub.has_edge(b, p[0])):
                return True
    return False


def _hole_plus_one(sub: Graph):
    """(family, cycle order, apex) when sub is a hole plus an isolated vertex or hub."""
    big = sub.n
    if big < 5:
        return None
    k = big - 1
    if sub.m == k:
        fam, want = "C-star", 0
    elif sub.m == 2 * k:
        fam, want = "wheel", k
    else:
        return None
    for x in range(big):
        if len(sub.adj[x]) != want:
            continue
        rest = [v for v in range(big) if v != x]
        cyc = _cycle_order(sub, rest)
        if cyc is not None:
            return fam, cyc, x
    return None


def _cycle_order(sub: Graph, verts: Sequence[int]):
    vs = set(verts)
    if len(vs) < 4:
        return None
    for v in vs:
        if sum(1 for u in sub.adj[v] if u in vs) != 2:
            return None
    start = min(vs)
    order, prev = [start], -1
    while True:
        nxt = [u for u in sub.adj[order[-1]] if u in vs and u != prev]
        nxt = nxt[0] if prev != -1 else min(nxt)
        if nxt == start:
            break
        prev = order[-1]
        order.append(nxt)
        if len(order) > len(vs):
            return None
    return order if len(order) == len(vs) else None


# classification ---------------------------------------------------------------

def classify_fis(g: Graph, s: Sequence[int]) -> FisWitness | None:
    """The catalog family induced by ``s`` in ``g``, or None."""
    try:
        verts = sorted(set(int(x) for x in s))
        if len(verts) != len(list(s)):
            return None
        sub, _ = induced_subgraph(g, verts)
    except (GraphError, ValueError, TypeError):
        return None
    found = _hole_plus_one(sub)
    if found is not None:
        fam, cyc, x = found
        return FisWitness(fam, tuple(verts), tuple(verts[i] for i in cyc), verts[x])
    if sub.n <= 7:
        for tag in FINITE:
            ref = catalog_graph(tag)
            if ref.n == sub.n and ref.m == sub.m and is_isomorphic_small(ref, sub):
                return FisWitness(tag, tuple(verts))
    if _is_net(sub):
        return FisWitness("dagger-net", tuple(verts))
    if _is_tent(sub):
        return FisWitness("double-dagger", tuple(verts))
    return None


def check_witness(g: Graph, w: FisWitness) -> str | None:
    """None when ``w`` is a well-formed witness in ``g``, else the violation."""
    if w.family not in FAMILIES:
        return f"unknown family {w.family!r}"
    if any(not (0 <= v < g.n) for v in w.vertices):
        return "vertex out of range"
    if len(set(w.vertices)) != len(w.vertices):
        return "repeated vertex"
    got = classify_fis(g, w.vertices)
    if got is None:
        return "vertex set is not a forbidden induced subgraph"
    if got.family != w.family:
        return f"vertex set is a {got.family}, not a {w.family}"
    if w.family in ("C-star", "wheel"):
        if w.hole is None or w.apex is None:
            return "missing hole or apex"
        if set(w.hole) | {w.apex} != set(w.vertices) or w.apex in w.hole:
            return "hole and apex do not partition the vertex set"
        if not is_hole(g, list(w.hole)):
            return "hole is not an induced cycle"
        hits = sum(1 for h in w.hole if g.has_edge(h, w.apex))
        if hits != (0 if w.family == "C-star" else len(w.hole)):
            return "apex adjacency does not match the family"
    return None


# validation ---------------------------------------------------------------------

def simplicial_vertices(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        nb = g.adj[v]
        if all(g.has_edge(a, b) for i, a in enumerate(nb) for b in nb[i + 1:]):
            out.append(v)
    return out


def _distances(g: Graph) -> list[list[int]]:
    from collections import deque

    dist = []
    for s in range(g.n):
        d = [-1] * g.n
        d[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.adj[x]:
                if d[y] < 0:
                    d[y] = d[x] + 1
                    q.append(y)
        dist.append(d)
    return dist


@dataclass
class CatalogReport:
    checks: list[tuple[str, str]] = field(default_factory=list)

    def add(self, tag: str, prop: str, ok: bool) -> None:
        if not ok:
            raise CatalogError(f"{tag}: {prop} failed")
        self.checks.append((tag, prop))


def validate_catalog() -> CatalogReport:
    """Check every finite family; raises CatalogError naming family and property."""
    from .interval import is_interval
    from .oracle import exact_nhca, oracle_nhca

    rep = CatalogReport()
    for tag in FINITE:
        g = catalog_graph(tag)
        rep.add(tag, "self-classification", (classify_fis(g, range(g.n)) or FisWitness("", ())).family == tag)
        if tag in CHORDAL_FAMILIES:
            rep.add(tag, "chordal", is_chordal(g))
            rep.add(tag, "non-interval", not is_interval(g))
            rep.add(tag, "minimal non-interval",
                    all(is_interval(induced_subgraph(g, [y for y in range(g.n) if y != x])[0])
                        for x in range(g.n)))
            rep.add(tag, "three simplicial terminals", len(simplicial_vertices(g)) == 3)
        if tag == "whipping-top":
            d = _distances(g)
            diam = max(max(r) for r in d)
            far = {frozenset((u, v)) for u in range(g.n) for v in range(u + 1, g.n) if d[u][v] == diam}
            rep.add(tag, "diameter 3 attained by {t1,t3},{t2,t3} only",
                    diam == 3 and far == {frozenset((0, 2)), frozenset((1, 2))})
        rep.add(tag, "not NHCA", not exact_nhca(g) and not oracle_nhca(g).is_nhca)
        for x in range(g.n):
            h = induced_subgraph(g, [y for y in range(g.n) if y != x])[0]
            rep.add(tag, f"deleting vertex {x} gives NHCA", exact_nhca(h) and oracle_nhca(h).is_nhca)
    return rep
