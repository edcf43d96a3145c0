"""Census of single-bend representations of C4 on a small grid by shape class."""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from hellyepg.graphs import cycle
from hellyepg.recognizer import SearchBudget, recognize_all
from hellyepg.representation import UnclassifiableC4, classify_c4


@dataclass
class Config:
    grid: int = 4
    max_nodes: int = 10**8


def main(cfg: Config):
    t0 = time.perf_counter()
    tags = Counter()
    for rep in recognize_all(cycle(4), SearchBudget(cfg.grid, 1, cfg.max_nodes)):
        try:
            s = classify_c4(rep, [0, 1, 2, 3])
        except UnclassifiableC4:
            tags["unclassifiable"] += 1
            continue
        tags["square frame" if s.square else s.tag] += 1
    for tag, count in sorted(tags.items()):
        print(f"{tag:15s} {count}")
    print(f"total {sum(tags.values())} in {time.perf_counter() - t0:.1f}s")
    return tags


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", type=int, default=Config.grid)
    ap.add_argument("--max-nodes", type=int, default=Config.max_nodes)
    args = ap.parse_args()
    main(Config(args.grid, args.max_nodes))
