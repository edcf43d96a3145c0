"""Bend statistics of the stair construction.

For every path this compares the actual bend count with the clique-count
lower value (cliques containing the vertex minus one) and with mu - 1, for
each clique ordering strategy.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from hellyepg.graphs import generator_samples, random_graph
from hellyepg.stair import stair_layout


@dataclass
class Config:
    graphs: int = 1000
    max_n: int = 12
    seed: int = 20240601


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    graphs = [g for _, g in generator_samples()]
    graphs += [random_graph(rng.randint(1, cfg.max_n), rng.random(), rng) for _ in range(cfg.graphs)]
    for order in ("lex", "greedy", "best"):
        excess = Counter()
        over_mu = 0
        for g in graphs:
            layout = stair_layout(g, order)
            count = Counter(v for c in layout.cliques for v in c)
            mu = len(layout.cliques)
            for v, b in enumerate(layout.rep.bends()):
                excess[b - (count[v] - 1)] += 1
                over_mu += b > mu - 1
        exact = excess[0] / sum(excess.values())
        print(f"{order:6s} paths={sum(excess.values())} exact={exact:.3f} "
              f"excess histogram={dict(sorted(excess.items()))} above mu-1={over_mu}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--graphs", type=int, default=Config.graphs)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    main(Config(args.graphs, args.max_n, args.seed))
