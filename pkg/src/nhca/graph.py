"""Simple undirected graphs on dense integer ids.

A graph keeps a CSR view (``indptr``/``indices`` numpy arrays, rows sorted)
for the linear-time kernels and builds a tuple-of-tuples adjacency on demand
for the small case analyses that only touch a handful of vertices.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from typing import Iterable, Iterator, Sequence

import numpy as np


class GraphError(ValueError):
    """Invalid graph data (bad vertex id, loop, duplicate edge, ...)."""


class ParseError(GraphError):
    """Malformed edge-list document; the message names the offending line."""


class Graph:
    """Immutable simple graph with vertices ``0..n-1``."""

    __slots__ = ("n", "m", "indptr", "indices", "_adj", "_sets")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        self.n = int(n)
        self.indptr = indptr
        self.indices = indices
        self.m = int(len(indices)) // 2
        self._adj = None
        self._sets = None

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] | np.ndarray) -> "Graph":
        """Build from an edge list; loops, duplicates and bad ids raise GraphError."""
        if n < 0:
            raise GraphError("negative vertex count")
        arr = np.asarray(edges if isinstance(edges, np.ndarray) else list(edges), dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise GraphError("edges must be pairs")
        us, vs = arr[:, 0], arr[:, 1]
        if len(arr) and (us.min() < 0 or vs.min() < 0 or us.max() >= n or vs.max() >= n):
            raise GraphError("vertex id out of range")
        if np.any(us == vs):
            raise GraphError("self-loop")
        src = np.concatenate([us, vs])
        dst = np.concatenate([vs, us])
        order = np.lexsort((dst, src))
        src = src[order]
        dst = dst[order]
        if len(src) > 1:
            same = (src[1:] == src[:-1]) & (dst[1:] == dst[:-1])
            if np.any(same):
                k = int(np.argmax(same))
                raise GraphError(f"duplicate edge {int(src[k])} {int(dst[k])}")
        counts = np.bincount(src, minlength=n) if n else np.zeros(0, dtype=np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return cls(n, indptr, np.ascontiguousarray(dst, dtype=np.int64))

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        """Build from per-vertex neighbor collections (must be symmetric)."""
        edges = [(u, v) for u, nb in enumerate(adj) for v in nb if u < v]
        g = cls.from_edges(len(adj), edges)
        if 2 * g.m != sum(len(set(nb)) for nb in adj):
            raise GraphError("adjacency is not symmetric")
        return g

    # queries ------------------------------------------------------------

    @property
    def adj(self) -> list[tuple[int, ...]]:
        if self._adj is None:
            flat = self.indices.tolist()
            ptr = self.indptr.tolist()
            self._adj = [tuple(flat[ptr[i]:ptr[i + 1]]) for i in range(self.n)]
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def nset(self, v: int) -> frozenset[int]:
        if self._sets is None:
            self._sets = [None] * self.n
        s = self._sets[v]
        if s is None:
            s = self._sets[v] = frozenset(self.adj[v])
        return s

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in row:
                if u < v:
                    yield (u, v)

    def edge_array(self) -> np.ndarray:
        src = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        keep = src < self.indices
        return np.stack([src[keep], self.indices[keep]], axis=1)

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __hash__(self) -> int:
        return hash((self.n, self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# edge-list documents -----------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``.

    Blank lines and lines starting with ``#`` are skipped.  Errors are
    reported with the 1-based line number of the offending line.
    """
    lines = text.splitlines()
    header = None
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    n = m = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"malformed line {lineno}: expected two integers")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"malformed line {lineno}: expected two integers") from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError(f"malformed header at line {lineno}")
            header = (a, b)
            n, m = a, b
            continue
        if len(edges) >= m:
            raise ParseError(f"too many edges at line {lineno} (header says {m})")
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex out of range at line {lineno}")
        if a == b:
            raise ParseError(f"loop at line {lineno}")
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise ParseError(f"duplicate edge at line {lineno}")
        seen.add(key)
        edges.append(key)
    if header is None:
        raise ParseError("missing header line")
    if len(edges) != m:
        raise ParseError(f"expected {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def emit_graph(g: Graph) -> str:
    """Edge-list document with edges sorted lexicographically."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


# derived graphs -----------------------------------------------------------

def induced_subgraph(g: Graph, s: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``; vertex ``s[i]`` becomes ``i``."""
    index = {}
    for i, v in enumerate(s):
        if not (0 <= v < g.n):
            raise GraphError(f"invalid vertex {v}")
        if v in index:
            raise GraphError(f"repeated vertex {v}")
        index[v] = i
    edges = []
    for v in s:
        iv = index[v]
        for u in g.adj[v]:
            iu = index.get(u)
            if iu is not None and iv < iu:
                edges.append((iv, iu))
    return Graph.from_edges(len(s), edges), index


def subgraph(g: Graph, s: Iterable[int]) -> Graph:
    return induced_subgraph(g, sorted(set(s)))[0]


def cycle_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, list(itertools.combinations(range(k), 2)))


def complement(g: Graph) -> Graph:
    return Graph.from_edges(g.n, [(u, v) for u, v in itertools.combinations(range(g.n), 2)
                                  if not g.has_edge(u, v)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, list(g.edges()) + shifted)


def add_vertex(g: Graph, nbrs: Iterable[int]) -> Graph:
    """Append a new vertex ``g.n`` adjacent to ``nbrs``."""
    return Graph.from_edges(g.n + 1, list(g.edges()) + [(v, g.n) for v in nbrs])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


# isomorphism for small graphs ---------------------------------------------

ISO_LIMIT = 12


def _refine(g: Graph) -> list[tuple]:
    # two rounds of degree refinement as a vertex invariant
    deg = [len(r) for r in g.adj]
    inv = [(d,) for d in deg]
    for _ in range(2):
        inv = [(inv[v], tuple(sorted(inv[u] for u in g.adj[v]))) for v in range(g.n)]
    return inv


def find_isomorphism(g1: Graph, g2: Graph) -> list[int] | None:
    """Bijection ``f`` with ``uv in E1 <=> f(u)f(v) in E2``, or None."""
    if g1.n > ISO_LIMIT or g2.n > ISO_LIMIT:
        raise GraphError(f"isomorphism test limited to {ISO_LIMIT} vertices")
    if g1.n != g2.n or g1.m != g2.m:
        return None
    inv1, inv2 = _refine(g1), _refine(g2)
    if sorted(inv1) != sorted(inv2):
        return None
    n = g1.n
    order = sorted(range(n), key=lambda v: (-len(g1.adj[v]), inv1[v]))
    cand = {v: [x for x in range(n) if inv2[x] == inv1[v]] for v in range(n)}
    f = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for x in cand[v]:
            if used[x]:
                continue
            ok = True
            for j in range(k):
                u = order[j]
                if g1.has_edge(u, v) != g2.has_edge(f[u], x):
                    ok = False
                    break
            if ok:
                f[v] = x
                used[x] = True
                if extend(k + 1):
                    return True
                used[x] = False
        f[v] = -1
        return False

    return f if extend(0) else None


def is_isomorphic_small(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None
