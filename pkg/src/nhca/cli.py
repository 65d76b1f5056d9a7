"""Command-line front end.

Exit codes: 0 model (or success), 1 forbidden subgraph (or failed check),
2 usage, input or internal error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from .arcmodel import ModelFormatError
from .chordal import InternalError
from .driver import Certificate, certificate_from_json, certificate_problem, recognize
from .graph import Graph, GraphError, emit_graph, induced_subgraph, parse_graph
from .oracle import gen_cycle_with_trees, gen_random_graph, gen_random_nhca, oracle_nhca

EXIT_MODEL, EXIT_FORBIDDEN, EXIT_ERROR = 0, 1, 2
ORACLE_NMAX = 10
GENERATORS = {"nhca": gen_random_nhca, "random": gen_random_graph, "cycle-trees": gen_cycle_with_trees}


@dataclass
class RunConfig:
    subcommand: str
    inputs: tuple[str, ...] = ()
    format: str = "json"
    seed: int = 0
    count: int = 1
    nmin: int = 1
    nmax: int = 8
    kind: str = "nhca"
    out: str | None = None


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(cfg: RunConfig, text: str) -> None:
    if cfg.out is None or cfg.out == "-":
        sys.stdout.write(text)
    else:
        Path(cfg.out).write_text(text)


def load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


# rendering -------------------------------------------------------------------

def _frac_str(p: int, q: int) -> str:
    from fractions import Fraction
    return str(Fraction(p, q))


def render_text(g: Graph, c: Certificate) -> str:
    if c.model is not None:
        m = c.model
        lines = [f"NHCA: yes ({g.n} vertices, {g.m} edges)"]
        lines += [f"  {v}: [{_frac_str(int(m.ccw[v]), m.den)}, {_frac_str(int(m.cw[v]), m.den)}]"
                  for v in range(g.n)]
    else:
        w = c.forbidden
        lines = [f"NHCA: no, contains {w.family} on {len(w.vertices)} vertices",
                 "  vertices: " + " ".join(map(str, w.vertices))]
        if w.hole is not None:
            lines.append("  hole: " + " ".join(map(str, w.hole)))
        if w.apex is not None:
            lines.append(f"  apex: {w.apex}")
    lines.append("  trace: " + " ".join(c.trace))
    return "\n".join(lines) + "\n"


def render_dot(g: Graph, c: Certificate) -> str:
    if c.model is not None:
        m = c.model
        lines = ["graph model {", '  label="circular-arc model";']
        for v in range(g.n):
            arc = f"{_frac_str(int(m.ccw[v]), m.den)}..{_frac_str(int(m.cw[v]), m.den)}"
            lines.append(f'  {v} [label="{v} [{arc}]"];')
        lines += [f"  {a} -- {b};" for a, b in g.edges()]
    else:
        w = c.forbidden
        sub, _ = induced_subgraph(g, list(w.vertices))
        lines = ["graph forbidden {", f'  label="{w.family}";']
        hole = set(w.hole or ())
        for v in w.vertices:
            attrs = f'label="{v}"'
            if v == w.apex:
                attrs += ", shape=doublecircle"
            elif v in hole:
                attrs += ", shape=box"
            lines.append(f"  {v} [{attrs}];")
        lines += [f"  {w.vertices[a]} -- {w.vertices[b]};" for a, b in sub.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def render(g: Graph, c: Certificate, fmt: str) -> str:
    if fmt == "json":
        return c.dumps() + "\n"
    if fmt == "dot":
        return render_dot(g, c)
    return render_text(g, c)


# subcommands -------------------------------------------------------------------

def cmd_recognize(cfg: RunConfig) -> int:
    g = load_graph(cfg.inputs[0])
    c = recognize(g)
    _write(cfg, render(g, c, cfg.format))
    return EXIT_MODEL if c.is_nhca else EXIT_FORBIDDEN


def cmd_verify(cfg: RunConfig) -> int:
    g = load_graph(cfg.inputs[0])
    try:
        doc = json.loads(_read(cfg.inputs[1]))
        c = certificate_from_json(doc)
    except (json.JSONDecodeError, AttributeError, TypeError, KeyError) as exc:
        raise ModelFormatError(f"malformed certificate: {exc}") from None
    problem = certificate_problem(g, c)
    if problem is None:
        _write(cfg, "ok\n")
        return 0
    _write(cfg, f"invalid: {problem}\n")
    return 1


def generate(cfg: RunConfig) -> list[Graph]:
    rng = random.Random(cfg.seed)
    gen = GENERATORS[cfg.kind]
    out = []
    for _ in range(cfg.count):
        n = rng.randint(cfg.nmin, cfg.nmax)
        out.append(gen(rng.randrange(2**31), n))
    return out


def cmd_gen(cfg: RunConfig) -> int:
    graphs = generate(cfg)
    if cfg.count == 1:
        _write(cfg, emit_graph(graphs[0]))
        return 0
    if cfg.out is None or cfg.out == "-":
        sys.stdout.write("".join(f"# graph {i}\n" + emit_graph(g) for i, g in enumerate(graphs)))
        return 0
    d = Path(cfg.out)
    d.mkdir(parents=True, exist_ok=True)
    width = len(str(cfg.count - 1))
    for i, g in enumerate(graphs):
        (d / f"g{i:0{width}d}.txt").write_text(emit_graph(g))
    return 0


def cmd_oracle(cfg: RunConfig) -> int:
    g = load_graph(cfg.inputs[0])
    if g.n > ORACLE_NMAX:
        raise UsageError(f"oracle handles at most {ORACLE_NMAX} vertices, got {g.n}")
    v = oracle_nhca(g)
    if v.is_nhca:
        doc = {"answer": "model"}
    else:
        doc = {"answer": "forbidden", "forbidden": v.witness.to_json()}
    _write(cfg, json.dumps(doc) + "\n")
    return EXIT_MODEL if v.is_nhca else EXIT_FORBIDDEN


def diff_corpus(seed: int, count: int, nmax: int):
    """Seeded mix of arbitrary graphs and perturbed NHCA graphs, n <= nmax."""
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(1, nmax)
        s = rng.randrange(2**31)
        if i % 2 == 0:
            yield gen_random_graph(s, n)
            continue
        g = gen_random_nhca(s, n)
        if n >= 2 and rng.random() < 0.5:
            a, b = rng.sample(range(n), 2)
            edges = set(g.edges()) ^ {(min(a, b), max(a, b))}
            g = Graph.from_edges(n, sorted(edges))
        yield g


def cmd_diff(cfg: RunConfig) -> int:
    if cfg.nmax > ORACLE_NMAX:
        raise UsageError(f"--nmax must be at most {ORACLE_NMAX}")
    agree = 0
    for g in diff_corpus(cfg.seed, cfg.count, cfg.nmax):
        c = recognize(g)
        problem = certificate_problem(g, c)
        if problem is None and c.is_nhca == oracle_nhca(g).is_nhca:
            agree += 1
            continue
        repro = Path(cfg.out or "diff_reproducer.txt")
        repro.write_text(emit_graph(g))
        sys.stdout.write(f"disagreement after {agree} agreements; reproducer written to {repro}\n")
        return 1
    sys.stdout.write(f"{agree}/{cfg.count} agree\n")
    return 0


COMMANDS = {"recognize": cmd_recognize, "verify": cmd_verify, "gen": cmd_gen,
            "oracle": cmd_oracle, "diff": cmd_diff}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nhca", description="Certifying recognition of normal Helly circular-arc graphs.")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, fmt=False):
        sp.add_argument("--out", help="output file (default: stdout)")
        if fmt:
            sp.add_argument("--format", choices=["json", "dot", "text"], default="json")

    r = sub.add_parser("recognize", help="recognize a graph; exit 0 model, 1 forbidden")
    r.add_argument("graph", help='edge-list file, "-" for stdin')
    common(r, fmt=True)
    v = sub.add_parser("verify", help="check a certificate against a graph")
    v.add_argument("graph")
    v.add_argument("certificate")
    common(v)
    o = sub.add_parser("oracle", help="exhaustive oracle (n <= 10)")
    o.add_argument("graph")
    common(o)
    gn = sub.add_parser("gen", help="generate seeded graphs")
    gn.add_argument("--kind", choices=sorted(GENERATORS), default="nhca")
    gn.add_argument("--nmin", type=int, default=1)
    gn.add_argument("--nmax", type=int, default=8)
    d = sub.add_parser("diff", help="differential run against the oracle")
    d.add_argument("--nmax", type=int, default=8)
    for sp in (gn, d):
        sp.add_argument("--seed", type=int, required=True)
        sp.add_argument("--count", type=int, default=1)
        common(sp)
    return p


def parse_config(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    inputs = tuple(x for x in (getattr(ns, "graph", None), getattr(ns, "certificate", None)) if x is not None)
    cfg = RunConfig(ns.subcommand, inputs)
    for key in ("format", "seed", "count", "nmin", "nmax", "kind", "out"):
        if getattr(ns, key, None) is not None:
            setattr(cfg, key, getattr(ns, key))
    if cfg.count < 1:
        raise UsageError("--count must be positive")
    if cfg.nmin < 1 or cfg.nmax < cfg.nmin:
        raise UsageError("need 1 <= --nmin <= --nmax")
    return cfg


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
        return COMMANDS[cfg.subcommand](cfg)
    except SystemExit as exc:  # argparse
        return EXIT_ERROR if exc.code else 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except (OSError, GraphError, ModelFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
