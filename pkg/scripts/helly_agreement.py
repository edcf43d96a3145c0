"""Compare the three Helly checkers on random single-bend representations.

Prints the number of samples, how many were non-Helly, and any disagreement.
"""

import argparse
import random
import time
from dataclasses import dataclass

from hellyepg.representation import find_claw_cliques, helly_by_cliques, helly_by_gilmore
from hellyepg.sampling import random_rep


@dataclass
class Config:
    samples: int = 10_000
    n: int = 5
    grid: int = 6
    seed: int = 0
    reference: bool = False  # also run the unrestricted triple enumeration


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    t0 = time.perf_counter()
    non_helly = disagree = 0
    for s in range(cfg.samples):
        rep = random_rep(rng, cfg.n, cfg.grid, cfg.grid, 1)
        verdicts = [bool(helly_by_cliques(rep)), bool(helly_by_gilmore(rep)), not find_claw_cliques(rep)]
        if cfg.reference:
            verdicts.append(bool(helly_by_gilmore(rep, reference=True)))
        non_helly += not verdicts[0]
        if len(set(verdicts)) > 1:
            disagree += 1
            print(f"sample {s}: verdicts {verdicts}")
    print(f"samples={cfg.samples} non_helly={non_helly} disagreements={disagree} "
          f"time={time.perf_counter() - t0:.1f}s")
    return disagree


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--n", type=int, default=Config.n)
    ap.add_argument("--grid", type=int, default=Config.grid)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--reference", action="store_true")
    args = ap.parse_args()
    raise SystemExit(1 if main(Config(**vars(args))) else 0)
