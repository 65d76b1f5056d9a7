"""Wall-clock scaling of recognize on the two large families.

    python3 scripts/scaling.py --sizes 12500 25000 50000 100000 200000
"""

import argparse
import time
from dataclasses import dataclass, field

from nhca.driver import recognize
from nhca.fis import STATS
from nhca.oracle import gen_cycle_with_trees, gen_random_nhca


@dataclass
class ScaleConfig:
    sizes: list = field(default_factory=lambda: [12_500, 25_000, 50_000, 100_000, 200_000])
    reps: int = 3
    seed: int = 11
    avg_degree: float = 5.0


def best_time(g, reps):
    best = float("inf")
    for _ in range(reps):
        t = time.perf_counter()
        c = recognize(g)
        best = min(best, time.perf_counter() - t)
    return best, c


def main(cfg: ScaleConfig):
    families = {
        "cycle+trees": lambda n: gen_cycle_with_trees(cfg.seed, n),
        "random-nhca": lambda n: gen_random_nhca(cfg.seed, n, avg_degree=cfg.avg_degree, cover=True),
    }
    for make in families.values():
        recognize(make(2000))  # JIT warm-up
    print(f"{'family':<12} {'n':>8} {'m':>8} {'answer':>9} {'sec':>7} {'ratio':>6}")
    for name, make in families.items():
        prev = None
        for n in cfg.sizes:
            g = make(n)
            before = STATS["fallback"]
            dt, c = best_time(g, cfg.reps)
            ratio = f"{dt / prev:.2f}" if prev else "-"
            print(f"{name:<12} {n:>8} {g.m:>8} {c.answer:>9} {dt:>7.3f} {ratio:>6}"
                  + ("  FALLBACK" if STATS["fallback"] > before else ""))
            prev = dt


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    p.add_argument("--sizes", type=int, nargs="+", default=ScaleConfig().sizes)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=11)
    p.add_argument("--avg-degree", type=float, default=5.0)
    a = p.parse_args()
    main(ScaleConfig(a.sizes, a.reps, a.seed, a.avg_degree))
