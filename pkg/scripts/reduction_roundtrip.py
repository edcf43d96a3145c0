"""Formula -> gadget graph -> representation -> assignment, on random formulas."""

import argparse
import random
import time
from dataclasses import dataclass

from hellyepg.reduction import build_gf, extract_assignment, random_formula, realize
from hellyepg.representation import find_claw_cliques, helly_by_gilmore, realizes


@dataclass
class Config:
    formulas: int = 50
    max_vars: int = 8
    max_clauses: int = 6
    seed: int = 0
    gilmore: bool = False


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    failures = 0
    t0 = time.perf_counter()
    for i in range(cfg.formulas):
        f, sol = random_formula(rng, cfg.max_vars, cfg.max_clauses)
        gg = build_gf(f)
        rep = realize(f, sol)
        ok = bool(realizes(rep, gg.graph, 1)) and not find_claw_cliques(rep)
        if cfg.gilmore:
            ok = ok and bool(helly_by_gilmore(rep))
        ok = ok and extract_assignment(rep, gg) == sol
        failures += not ok
        print(f"{i:3d} vars={f.num_vars} clauses={len(f.clauses)} n={gg.graph.n} "
              f"grid={rep.width}x{rep.height} {'ok' if ok else 'FAIL'}")
    print(f"failures={failures} time={time.perf_counter() - t0:.1f}s")
    return failures


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--formulas", type=int, default=Config.formulas)
    ap.add_argument("--max-vars", type=int, default=Config.max_vars)
    ap.add_argument("--max-clauses", type=int, default=Config.max_clauses)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--gilmore", action="store_true")
    args = ap.parse_args()
    raise SystemExit(1 if main(Config(**vars(args))) else 0)
