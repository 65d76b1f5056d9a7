"""Differential run: recognizer against the oracle, plus certificate checks on
larger perturbed NHCA graphs.  Prints disagreements and extractor counters.

    python3 scripts/differential.py --count 20000 --nmax 10 --big 3000
"""

import argparse
import random
import time
from dataclasses import dataclass

from nhca.driver import recognize, reset_stats, verify_certificate
from nhca.fis import STATS
from nhca.graph import Graph, emit_graph
from nhca.oracle import gen_random_graph, gen_random_nhca, oracle_nhca


@dataclass
class DiffConfig:
    seed: int = 0
    count: int = 5000
    nmin: int = 4
    nmax: int = 10
    big: int = 1000
    big_nmax: int = 120


def perturbed(seed, n, flips):
    rng = random.Random(seed)
    g = gen_random_nhca(seed, n)
    edges = set(g.edges())
    for _ in range(flips):
        a, b = rng.sample(range(n), 2)
        edges ^= {(min(a, b), max(a, b))}
    return Graph.from_edges(n, sorted(edges))


def main(cfg: DiffConfig):
    reset_stats()
    rng = random.Random(cfg.seed)
    t0 = time.time()
    dis = neg = 0
    for i in range(cfg.count):
        n = rng.randint(cfg.nmin, cfg.nmax)
        s = rng.randrange(2**31)
        g = gen_random_graph(s, n) if i % 3 == 0 else perturbed(s, n, rng.randint(1, 2))
        c = recognize(g)
        neg += not c.is_nhca
        if not verify_certificate(g, c) or c.is_nhca != oracle_nhca(g).is_nhca:
            dis += 1
            print("DISAGREE", i)
            print(emit_graph(g))
    print(f"small: {cfg.count} graphs, {neg} forbidden, {dis} disagreements, {time.time() - t0:.1f}s")

    t0 = time.time()
    bad = fallbacks = 0
    for i in range(cfg.big):
        n = rng.randint(11, cfg.big_nmax)
        before = STATS["fallback"]
        g = perturbed(rng.randrange(2**31), n, rng.randint(1, 3))
        c = recognize(g)
        bad += not verify_certificate(g, c)
        fallbacks += STATS["fallback"] > before
    print(f"large: {cfg.big} graphs, {bad} bad certificates, {fallbacks} fallbacks, {time.time() - t0:.1f}s")
    print("counters:", dict(sorted(STATS.items())))


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    for f in DiffConfig.__dataclass_fields__.values():
        p.add_argument("--" + f.name.replace("_", "-"), type=int, default=f.default)
    main(DiffConfig(**vars(p.parse_args())))
