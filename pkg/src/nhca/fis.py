"""Helpers shared by the extractors: verified emission and counters."""

from __future__ import annotations

from collections import Counter
from typing import Iterable

from .catalog import FisWitness, classify_fis
from .graph import Graph, induced_subgraph

# instrumentation: how often each path of the extractors is taken
STATS: Counter = Counter()


class WitnessFailure(Exception):
    """A case construction did not yield a catalog member.

    ``pool`` is a vertex set of the host that is known (or believed) to be
    non-NHCA; the driver minimalizes it instead.
    """

    def __init__(self, reason: str, pool: Iterable[int] = ()):
        super().__init__(reason)
        self.reason = reason
        self.pool = tuple(sorted(set(pool)))


def emit(g: Graph, verts: Iterable[int], expect: str | None = None, pool=()) -> FisWitness:
    """Classify ``verts``; raise WitnessFailure if it is not a catalog member."""
    vs = sorted(set(int(v) for v in verts))
    w = classify_fis(g, vs)
    if w is None:
        raise WitnessFailure(f"expected {expect or 'a forbidden subgraph'} on {vs}", set(vs) | set(pool))
    STATS["emit"] += 1
    if expect is not None and w.family != expect:
        STATS["family-differs"] += 1
    return w


def emit_hole_apex(g: Graph, hole: Iterable[int], apex: int, expect: str, pool=()) -> FisWitness:
    hole = list(hole)
    return emit(g, hole + [apex], expect, pool)


def within(g: Graph, verts: Iterable[int], expect: str | None = None) -> FisWitness:
    """Smallest catalog member inside a small vertex set (at most 10 vertices)."""
    from .oracle import oracle_nhca

    vs = sorted(set(int(v) for v in verts))
    if len(vs) > 10:
        raise WitnessFailure("set too large for local search", vs)
    sub, _ = induced_subgraph(g, vs)
    verdict = oracle_nhca(sub)
    if verdict.is_nhca:
        raise WitnessFailure(f"no forbidden subgraph inside {vs}", vs)
    STATS["within"] += 1
    return emit(g, [vs[i] for i in verdict.witness.vertices], expect)
