"""Regenerate the machine-made golden files under tests/data.

Hand-drawn goldens (pies, frames, claw triangle, ...) are not touched.
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

from hellyepg import io
from hellyepg.graphs import octahedron
from hellyepg.reduction import build_gf, demo_formula, realize, solve_1in3
from hellyepg.stair import stair_representation


@dataclass
class Config:
    out: Path = Path(__file__).resolve().parent.parent / "tests" / "data"


def main(cfg: Config):
    cfg.out.mkdir(parents=True, exist_ok=True)
    f = demo_formula()
    a = solve_1in3(f)
    files = {
        "stair_o3.rep": io.write_rep(stair_representation(octahedron())),
        "o3.graph": io.write_graph(octahedron()),
        "demo_gf.graph": io.write_graph(build_gf(f).graph),
        "demo_realized.rep": io.write_rep(realize(f, a)),
        "demo.assignment": io.write_assignment(a),
    }
    for name, text in files.items():
        (cfg.out / name).write_text(text)
        print(f"wrote {cfg.out / name}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Config.out)
    main(Config(ap.parse_args().out))
