"""Circular-arc models: exact representation, verification, JSON.

An arc runs clockwise from its ``ccw`` end to its ``cw`` end.  Endpoints are
``num / den`` with ``0 < num <= den``; an arc with ``cw < ccw`` wraps
through the point 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .graph import Graph


@dataclass(frozen=True, eq=False)
class CircularArcModel:
    ccw: np.ndarray  # numerators, int64
    cw: np.ndarray
    den: int

    def __len__(self) -> int:
        return len(self.ccw)

    def arc(self, v: int) -> tuple[Fraction, Fraction]:
        return Fraction(int(self.ccw[v]), self.den), Fraction(int(self.cw[v]), self.den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CircularArcModel):
            return NotImplemented
        return self.to_json() == other.to_json()

    def to_json(self) -> dict:
        return {"circle": 1, "arcs": [
            {"v": v, "ccw": _frac(int(self.ccw[v]), self.den), "cw": _frac(int(self.cw[v]), self.den)}
            for v in range(len(self.ccw))]}


def _frac(p: int, q: int) -> str:
    d = gcd(p, q)
    return f"{p // d}/{q // d}"


class ModelFormatError(ValueError):
    pass


def _parse_frac(text) -> Fraction:
    if not isinstance(text, str):
        raise ModelFormatError(f"endpoint {text!r} is not a 'p/q' string")
    try:
        p, q = text.split("/")
        return Fraction(int(p), int(q))
    except (ValueError, ZeroDivisionError):
        raise ModelFormatError(f"bad endpoint {text!r}") from None


def model_from_json(doc: dict) -> CircularArcModel:
    try:
        arcs = doc["arcs"]
        if doc.get("circle", 1) != 1:
            raise ModelFormatError("circle must be 1")
        rows = sorted(arcs, key=lambda a: a["v"])
        if [a["v"] for a in rows] != list(range(len(rows))):
            raise ModelFormatError("arcs must list vertices 0..n-1 once each")
        ccw = [_parse_frac(a["ccw"]) for a in rows]
        cw = [_parse_frac(a["cw"]) for a in rows]
    except (KeyError, TypeError) as exc:
        raise ModelFormatError(f"malformed model: {exc}") from None
    den = 1
    for f in ccw + cw:
        den = lcm(den, f.denominator)
    to_num = lambda f: f.numerator * (den // f.denominator)  # noqa: E731
    return CircularArcModel(np.array([to_num(f) for f in ccw], dtype=object if den > 2**62 else np.int64),
                            np.array([to_num(f) for f in cw], dtype=object if den > 2**62 else np.int64), den)


def interval_to_arcs(lp, rp) -> CircularArcModel:
    """Embed integer intervals in 1..2n on the circle, leaving point 1 uncovered."""
    lp = np.asarray(lp, dtype=np.int64)
    rp = np.asarray(rp, dtype=np.int64)
    return CircularArcModel(lp.copy(), rp.copy(), 2 * len(lp) + 1)


# verification ----------------------------------------------------------------

@dataclass(frozen=True)
class ModelCheck:
    status: str  # "ok" | "cover" | "mismatch" | "invalid"
    cover: tuple[int, ...] = ()
    pair: tuple[int, int] | None = None
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _ranks(model: CircularArcModel):
    """Endpoint ranks 0..2n-1 around the circle, or a problem description."""
    n = len(model)
    if np.any(model.ccw <= 0) or np.any(model.cw <= 0) or np.any(model.ccw > model.den) \
            or np.any(model.cw > model.den):
        return None, "endpoint outside (0,1]"
    vals = np.concatenate([model.ccw, model.cw])
    order = np.argsort(vals, kind="stable")
    srt = vals[order]
    if len(srt) > 1 and np.any(srt[1:] == srt[:-1]):
        return None, "duplicate endpoint"
    rank = np.empty(2 * n, dtype=np.int64)
    rank[order] = np.arange(2 * n)
    return rank, ""


def _pieces(s: np.ndarray, e: np.ndarray, size: int):
    """Arcs on ranks split into linear pieces [a, b] of [0, size]."""
    n = len(s)
    wrap = e < s
    ps = np.concatenate([s, np.zeros(int(wrap.sum()), np.int64)])
    pe = np.concatenate([np.where(wrap, size, e), e[wrap]])
    owner = np.concatenate([np.arange(n), np.nonzero(wrap)[0]])
    order = np.argsort(ps, kind="stable")
    return ps[order], pe[order], owner[order]


def _intersection_mismatch(g: Graph, s: np.ndarray, e: np.ndarray, size: int):
    n = g.n
    ps, pe, owner = _pieces(s, e, size)
    hi = np.searchsorted(ps, pe, side="right")
    cnt = hi - np.arange(len(ps)) - 1
    total = int(cnt.sum())
    if total > 4 * g.m + 4 * n + 8:
        # too many overlaps to be realizing g: find one non-edge directly
        for i in range(len(ps)):
            for j in range(i + 1, int(hi[i])):
                a, b = int(owner[i]), int(owner[j])
                if a != b and not g.has_edge(a, b):
                    return (min(a, b), max(a, b)), "non-edge realized"
        return None, "overlap count inconsistent"
    src = np.repeat(np.arange(len(ps)), cnt)
    offs = np.arange(total) - np.repeat(np.cumsum(cnt) - cnt, cnt)
    dst = src + 1 + offs
    a, b = owner[src], owner[dst]
    keep = a != b
    lo, hi2 = np.minimum(a[keep], b[keep]), np.maximum(a[keep], b[keep])
    got = np.unique(lo * max(n, 1) + hi2)
    ea = g.edge_array()
    want = ea[:, 0] * max(n, 1) + ea[:, 1] if len(ea) else np.zeros(0, np.int64)
    extra = np.setdiff1d(got, want, assume_unique=True)
    if len(extra):
        k = int(extra[0])
        return (k // n, k % n), "non-edge realized"
    missing = np.setdiff1d(want, got, assume_unique=True)
    if len(missing):
        k = int(missing[0])
        return (k // n, k % n), "edge not realized"
    return None, ""


def small_cover(s: np.ndarray, e: np.ndarray, size: int) -> tuple[int, ...]:
    """Smallest set of at most three arcs covering the circle, or ().

    Arcs are given on ranks 0..size-1 (all endpoints distinct).  A greedy
    walk from every arc, always jumping to the arc reaching furthest
    clockwise, finds a minimum cover containing that arc.
    """
    n = len(s)
    if n == 0:
        return ()
    length = np.mod(e - s, size)
    end = s + length  # unwrapped
    # far[p]: furthest unwrapped end among arcs containing point p (-1 if none)
    best_end = np.full(size, -1, np.int64)
    best_arc = np.full(size, -1, np.int64)
    order = np.lexsort((end, s))
    best_end[s[order]] = end[order]
    best_arc[s[order]] = order
    pm_end = np.maximum.accumulate(best_end)
    idx = np.where(best_end == pm_end, np.arange(size), 0)
    idx = np.maximum.accumulate(idx)
    pm_arc = best_arc[idx]
    wrapping = end >= size
    if np.any(wrapping):
        w = int(np.argmax(np.where(wrapping, end, -1)))
        w_end = int(end[w]) - size
        use_w = w_end > pm_end
        far_end = np.where(use_w, w_end, pm_end)
        far_arc = np.where(use_w, w, pm_arc)
    else:
        far_end, far_arc = pm_end, pm_arc

    def jump(x):
        base = (x // size) * size
        p = x - base
        return int(far_end[p]) + base, int(far_arc[p])

    for r in (2, 3):
        for a in range(n):
            x = int(end[a])
            goal = int(s[a]) + size
            used = [a]
            for _ in range(r - 1):
                if x >= goal:
                    break
                y, b = jump(x)
                if y <= x:
                    break
                used.append(b)
                x = y
            if x >= goal and len(used) <= r:
                return tuple(sorted(set(used)))
    return ()


def verify_model(g: Graph, model: CircularArcModel) -> ModelCheck:
    """ok iff the arcs realize ``g`` and no three or fewer arcs cover the circle."""
    n = g.n
    if len(model.ccw) != n or len(model.cw) != n:
        return ModelCheck("invalid", message="wrong number of arcs")
    if n == 0:
        return ModelCheck("ok")
    rank, problem = _ranks(model)
    if rank is None:
        return ModelCheck("invalid", message=problem)
    s, e = rank[:n], rank[n:]
    pair, msg = _intersection_mismatch(g, s, e, 2 * n)
    if msg:
        return ModelCheck("mismatch", pair=pair, message=msg)
    cov = small_cover(s, e, 2 * n)
    if cov:
        return ModelCheck("cover", cover=cov, message=f"{len(cov)} arcs cover the circle")
    return ModelCheck("ok")


# synthesis from an interval model of the auxiliary graph -------------------------

def normalize_interval_model(aux, im):
    """Orient the model so that w is left of the right copies; endpoints
    become ranks 1..2N (order preserving)."""
    from .interval import IntervalModel, model_from_spans

    lp = np.asarray(im.lp, dtype=np.int64)
    rp = np.asarray(im.rp, dtype=np.int64)
    h1r = int(aux.rid[aux.proj.h(1)])
    if lp[aux.w] > lp[h1r]:
        top = int(max(lp.max(), rp.max())) + 1
        lp, rp = top - rp, top - lp
    ranked = model_from_spans(lp, rp)
    return IntervalModel(ranked.lp, ranked.rp)


def build_ca_model(aux, im) -> CircularArcModel:
    """Arcs of the input graph read off a normalized interval model of the
    auxiliary graph: rp(w) becomes 0 and the largest right end in T̄ becomes 1."""
    from .auxgraph import TBAR
    from .chordal import InternalError

    im = normalize_interval_model(aux, im)
    lp, rp = im.lp, im.rp
    g = aux.g
    tb = np.nonzero(aux.side == TBAR)[0]
    zero = int(rp[aux.w])
    one = int(rp[tb].max())
    den = one - zero
    if den <= 0:
        raise InternalError("interval model of the auxiliary graph is not normalizable")
    n = g.n
    ccw = np.empty(n, np.int64)
    cw = np.empty(n, np.int64)
    outside = np.nonzero(~aux.in_T)[0]
    tid = aux.tid[outside]
    ccw[outside], cw[outside] = lp[tid], rp[tid]
    inside = np.nonzero(aux.in_T)[0]
    lid = aux.lid[inside]
    ccw[inside], cw[inside] = lp[lid], rp[lid]
    wrap = inside[aux.ccw_mate[inside] >= 0]
    ccw[wrap] = lp[aux.rid[wrap]]
    ccw -= zero
    cw -= zero
    if np.any(ccw <= 0) or np.any(cw <= 0) or np.any(ccw > den) or np.any(cw > den):
        raise InternalError("arc endpoint outside (0,1] after normalization")
    return CircularArcModel(ccw, cw, den)
