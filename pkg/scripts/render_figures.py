"""Write SVG drawings of the bundled example representations."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from hellyepg import io
from hellyepg.graphs import octahedron
from hellyepg.reduction import build_gf, demo_formula, realize, solve_1in3
from hellyepg.render import render_svg
from hellyepg.stair import stair_representation

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"


@dataclass
class Config:
    out: Path = Path("figures")
    cell: int = 40


def main(cfg: Config):
    cfg.out.mkdir(parents=True, exist_ok=True)
    figures = {name: io.read_rep((DATA / f"{name}.rep").read_text())
               for name in ("edge_clique_triangle", "claw_triangle", "true_pie", "false_pie",
                            "frame", "square_frame", "k24_false_pies", "o3_b1")}
    figures["stair_o3"] = stair_representation(octahedron())
    f = demo_formula()
    gf_rep = realize(f, solve_1in3(f))
    roles = build_gf(f).roles
    for name, rep in figures.items():
        (cfg.out / f"{name}.svg").write_text(render_svg(rep, cfg.cell))
    (cfg.out / "demo_realized.svg").write_text(render_svg(gf_rep, max(cfg.cell // 2, 8), labels=roles))
    print(f"wrote {len(figures) + 1} figures to {cfg.out}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Config.out)
    ap.add_argument("--cell", type=int, default=Config.cell)
    args = ap.parse_args()
    main(Config(args.out, args.cell))
