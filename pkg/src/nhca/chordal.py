"""Chordality test by maximum cardinality search and hole extraction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .graph import Graph


class InternalError(RuntimeError):
    """Raised when an internal invariant fails (a bug, never an input fault)."""


@dataclass(frozen=True)
class ChordalityWitness:
    """Vertex ``v`` with earlier-visited neighbors ``a`` and ``b``, ``a`` !~ ``b``."""

    v: int
    a: int
    b: int
    visit: np.ndarray  # search order that produced the witness


@dataclass(frozen=True)
class ChordalCheck:
    elimination: np.ndarray | None  # perfect elimination order when chordal
    witness: ChordalityWitness | None

    @property
    def is_chordal(self) -> bool:
        return self.witness is None


@dataclass(frozen=True)
class Hole:
    """Induced cycle ``h_0 .. h_{k-1}``; index +1 is the clockwise direction."""

    vertices: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i: int) -> int:
        return self.vertices[i % len(self.vertices)]

    def index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def rotated(self, start: int) -> "Hole":
        k = len(self.vertices)
        return Hole(tuple(self.vertices[(start + i) % k] for i in range(k)))

    def mirrored(self) -> "Hole":
        """Same cycle, same ``h_0``, opposite orientation."""
        k = len(self.vertices)
        return Hole(tuple(self.vertices[(-i) % k] for i in range(k)))


def check_chordal(g: Graph) -> ChordalCheck:
    visit = K.mcs_order(g.n, g.indptr, g.indices)
    v, a, b = K.peo_failure(g.n, g.indptr, g.indices, visit)
    if v == -1:
        return ChordalCheck(visit[::-1].copy(), None)
    return ChordalCheck(None, ChordalityWitness(int(v), int(a), int(b), visit))


def is_chordal(g: Graph) -> bool:
    return check_chordal(g).is_chordal


def is_hole(g: Graph, seq) -> bool:
    k = len(seq)
    if k < 4 or len(set(seq)) != k:
        return False
    inside = set(seq)
    for i, v in enumerate(seq):
        if not g.has_edge(v, seq[(i + 1) % k]):
            return False
        if sum(1 for u in g.adj[v] if u in inside) != 2:
            return False
    return True


def find_hole(g: Graph, witness: ChordalityWitness) -> Hole:
    """Close the triple (a, v, b) into an induced cycle.

    A shortest a-b path avoiding N[v] except a and b is chordless and has
    no inner vertex adjacent to v, so together with v it is a hole.  The
    search first stays inside the vertices visited before v, which is where
    the search order guarantees such a path.
    """
    v, a, b = witness.v, witness.a, witness.b
    n = g.n
    pos = np.empty(n, dtype=np.int64)
    pos[witness.visit] = np.arange(n, dtype=np.int64)
    blocked = np.zeros(n, dtype=np.bool_)
    blocked[np.asarray(g.adj[v], dtype=np.int64)] = True
    blocked[v] = True
    blocked[a] = blocked[b] = False
    allowed = (~blocked) & (pos < pos[v])
    path = K.bfs_path(n, g.indptr, g.indices, a, b, allowed)
    if len(path) == 0:
        path = K.bfs_path(n, g.indptr, g.indices, a, b, ~blocked)
    if len(path) == 0:
        raise InternalError("no hole through the chordality witness")
    seq = (v,) + tuple(int(x) for x in path)
    if not is_hole(g, seq):
        raise InternalError("extracted cycle is not a hole")
    return Hole(seq)


def any_hole(g: Graph) -> Hole | None:
    chk = check_chordal(g)
    return None if chk.is_chordal else find_hole(g, chk.witness)
