"""Top-level certifying recognition."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .arcmodel import CircularArcModel, build_ca_model, interval_to_arcs, verify_model
from .auxgraph import build_aux, check_sector_cliques
from .catalog import FisWitness, check_witness, classify_fis
from .chordal import InternalError, check_chordal, find_hole
from .extraction import extract, fallback_minimalize
from .fis import STATS, WitnessFailure
from .graph import Graph, induced_subgraph
from .holeframe import cover_to_wheel, normalize_hole
from .interval import interval_model_or_none, recognize_interval


@dataclass
class Certificate:
    model: CircularArcModel | None = None
    forbidden: FisWitness | None = None
    trace: list[str] = field(default_factory=list)

    @property
    def answer(self) -> str:
        return "model" if self.model is not None else "forbidden"

    @property
    def is_nhca(self) -> bool:
        return self.model is not None

    def __eq__(self, other) -> bool:
        # the trace is diagnostic only
        if not isinstance(other, Certificate):
            return NotImplemented
        return self.model == other.model and self.forbidden == other.forbidden

    def to_json(self) -> dict:
        out: dict = {"answer": self.answer}
        if self.model is not None:
            out["model"] = self.model.to_json()
        else:
            out["forbidden"] = self.forbidden.to_json()
        out["trace"] = list(self.trace)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)


class _NoModel(Exception):
    """Decision mode: the input is not NHCA, no witness requested."""


def _pipeline(g: Graph, trace: list[str], decide: bool):
    """A verified CircularArcModel or a FisWitness.

    In decision mode extraction is skipped: any non-model outcome raises
    _NoModel unless a verified witness is already at hand.
    """
    trace.append("chordality")
    chk = check_chordal(g)
    if chk.is_chordal:
        trace.append("interval")
        if decide:
            im = interval_model_or_none(g)
            if im is None:
                raise _NoModel()
        else:
            im = recognize_interval(g)
            if not hasattr(im, "lp"):
                w = classify_fis(g, im.vertices)
                if w is None:
                    raise InternalError("chordal non-interval witness outside the catalog")
                trace.append("chordal-witness")
                return w
        model = interval_to_arcs(im.lp, im.rp)
        if not verify_model(g, model).ok:
            raise InternalError("interval embedding failed verification")
        trace.append("model")
        return model
    hole = find_hole(g, chk.witness)
    trace.append(f"hole:{hole.k}")
    res = normalize_hole(g, hole)
    trace.append("projection")
    if isinstance(res, FisWitness):
        return res
    hole, proj = res
    aux = build_aux(g, proj)
    trace.append("aux")
    if isinstance(aux, FisWitness):
        return aux
    w = check_sector_cliques(g, aux)
    trace.append("sectors")
    if w is not None:
        return w
    trace.append("aux-interval")
    if decide:
        im = interval_model_or_none(aux.omega)
        if im is None:
            raise _NoModel()
    else:
        im = recognize_interval(aux.omega)
        if not hasattr(im, "lp"):
            trace.append(f"extract:{im.kind}")
            return extract(aux, im)
    model = build_ca_model(aux, im)
    chk_model = verify_model(g, model)
    trace.append("verify")
    if chk_model.ok:
        trace.append("model")
        return model
    if chk_model.status == "cover":
        trace.append(f"cover:{len(chk_model.cover)}")
        if decide:
            raise _NoModel()
        return cover_to_wheel(g, hole, proj, chk_model.cover)
    raise InternalError(f"synthesized model does not realize the graph: {chk_model.message}")


def recognize(g: Graph) -> Certificate:
    trace: list[str] = []
    try:
        out = _pipeline(g, trace, decide=False)
    except WitnessFailure as exc:
        trace.append("fallback")
        pool = list(exc.pool)
        if not pool or probe(g, pool)[0] == "model":
            pool = list(range(g.n))
        out = fallback_minimalize(g, pool)
    if isinstance(out, CircularArcModel):
        return Certificate(model=out, trace=trace)
    if check_witness(g, out) is not None:
        raise InternalError(f"emitted witness failed verification: {check_witness(g, out)}")
    return Certificate(forbidden=out, trace=trace)


def probe(g: Graph, s) -> tuple[str, FisWitness | None]:
    """Decide G[s]: ("model", None), ("fis", witness in g's ids) or ("no", None)."""
    verts = sorted(set(int(x) for x in s))
    sub, _ = induced_subgraph(g, verts)
    try:
        out = _pipeline(sub, [], decide=True)
    except (_NoModel, WitnessFailure):
        return "no", None
    if isinstance(out, CircularArcModel):
        return "model", None
    w = classify_fis(g, [verts[i] for i in out.vertices])
    if w is None:
        raise InternalError("probe witness does not lift to the host")
    return "fis", w


def verify_certificate(g: Graph, c: Certificate) -> bool:
    return certificate_problem(g, c) is None


def certificate_problem(g: Graph, c: Certificate) -> str | None:
    """None if the certificate checks out, else the first violated invariant."""
    if (c.model is None) == (c.forbidden is None):
        return "certificate must hold exactly one of model and forbidden"
    if c.model is not None:
        chk = verify_model(g, c.model)
        return None if chk.ok else chk.message
    return check_witness(g, c.forbidden)


def certificate_from_json(doc: dict) -> Certificate:
    from .arcmodel import ModelFormatError, model_from_json

    answer = doc.get("answer")
    if answer == "model":
        return Certificate(model=model_from_json(doc["model"]), trace=list(doc.get("trace", [])))
    if answer == "forbidden":
        f = doc["forbidden"]
        try:
            w = FisWitness(str(f["family"]), tuple(int(v) for v in f["vertices"]),
                           tuple(int(v) for v in f["hole"]) if f.get("hole") is not None else None,
                           int(f["apex"]) if f.get("apex") is not None else None)
        except (KeyError, TypeError, ValueError) as exc:
            raise ModelFormatError(f"malformed forbidden subgraph: {exc}") from None
        return Certificate(forbidden=w, trace=list(doc.get("trace", [])))
    raise ModelFormatError("answer must be 'model' or 'forbidden'")


def reset_stats() -> None:
    STATS.clear()
