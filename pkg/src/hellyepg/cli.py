"""Command line front end.

Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 usage
or format error.  Verdicts go to stdout, diagnostics to stderr.  File
arguments accept ``-`` for stdin, which is also the default.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .graphs import BadParameter, degeneracy, generate, helly_bend_bounds, maximal_cliques
from .reduction import (NotAOneInThreeSolution, NotARealization, MixedDirectionIntersection,
                        TooManyVariables, build_gf, extract_assignment, realize, role_kind,
                        solve_1in3)
from .recognizer import ExhaustedNo, Found, SearchBudget, recognize_bk
from .render import render_ascii, render_svg
from .representation import (NotB1, UnclassifiableC4, classify_c4, compact, find_claw_cliques,
                             helly_by_cliques, helly_by_gilmore, intersection_graph, realizes,
                             shapes_used)
from .stair import stair_representation


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(text: str, out: str = "-"):
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_verify(args) -> int:
    rep = io.read_rep(_read(args.rep))
    gg = None
    if args.graph and args.formula:
        raise io.ParseError("give at most one of --graph and --formula")
    if args.graph:
        g = io.read_graph(_read(args.graph))
    elif args.formula:
        gg = build_gf(io.read_formula(_read(args.formula)))
        g = gg.graph
    else:
        g = intersection_graph(rep)
    k = rep.max_bends() if args.k is None else args.k
    if rep.n != g.n:
        print(f"REALIZES k={k}: no")
        print(f"reason: {rep.n} paths for {g.n} vertices")
        return 1
    ok = realizes(rep, g, k)
    print(f"REALIZES k={k}: {'yes' if ok else 'no'}")
    if not ok:
        print(f"reason: {ok.reason}")
    verdict = helly_by_gilmore(rep) if args.gilmore else helly_by_cliques(rep)
    print(f"HELLY: {'yes' if verdict else 'no'}")
    if not verdict:
        print(f"witness: {verdict.witness}")
    if gg is not None and ok and verdict and rep.max_bends() <= 1:
        try:
            print(f"ASSIGNMENT: {extract_assignment(rep, gg).to_text()}")
        except (NotARealization, MixedDirectionIntersection) as exc:
            print(f"ASSIGNMENT: none ({exc})")
    return 0 if ok and verdict else 1


def cmd_stair(args) -> int:
    g = io.read_graph(_read(args.graph))
    _emit(io.write_rep(stair_representation(g, args.order)), args.out)
    return 0


def cmd_compact(args) -> int:
    _emit(io.write_rep(compact(io.read_rep(_read(args.rep)))), args.out)
    return 0


def cmd_reduce(args) -> int:
    gg = build_gf(io.read_formula(_read(args.formula)))
    _emit(io.write_graph(gg.graph), args.out)
    if args.roles:
        lines = [f"{i} {r} {role_kind(r)}" for i, r in enumerate(gg.roles)]
        _emit("\n".join(lines) + "\n", args.roles)
    return 0


def _assignment_arg(text: str):
    # either a literal like "F F T F" or a file holding one
    try:
        return io.read_assignment(text)
    except io.ParseError:
        return io.read_assignment(_read(text))


def cmd_realize(args) -> int:
    f = io.read_formula(_read(args.formula))
    a = _assignment_arg(args.assignment) if args.assignment else solve_1in3(f)
    if a is None:
        print("UNSATISFIABLE", file=sys.stderr)
        return 1
    rep = realize(f, a, do_compact=not args.no_compact)
    _emit(io.write_rep(rep), args.out)
    return 0


def cmd_solve(args) -> int:
    a = solve_1in3(io.read_formula(_read(args.formula)))
    if a is None:
        print("UNSATISFIABLE")
        return 1
    print(a.to_text())
    return 0


def cmd_recognize(args) -> int:
    g = io.read_graph(_read(args.graph))
    budget = SearchBudget(args.grid, args.k, args.max_nodes, args.helly)
    res = recognize_bk(g, budget)
    if isinstance(res, Found):
        print(f"FOUND after {res.nodes} nodes")
        _emit(io.write_rep(res.rep), args.out)
        return 0
    if isinstance(res, ExhaustedNo):
        scope = "complete" if res.covers_bound else "budgeted grid only"
        print(f"NONE within {args.grid}x{args.grid}, k={args.k} ({scope}, {res.nodes} nodes)")
    else:
        print(f"UNKNOWN: node budget of {res.nodes} exhausted")
    return 1


def cmd_classify(args) -> int:
    rep = io.read_rep(_read(args.rep))
    cyc = [int(t) for t in args.cycle.replace(",", " ").split()]
    try:
        print(classify_c4(rep, cyc))
    except UnclassifiableC4 as exc:
        print(f"UNCLASSIFIABLE: {exc}")
        return 1
    return 0


def cmd_shapes(args) -> int:
    rep = io.read_rep(_read(args.rep))
    used = shapes_used(rep)
    print("shapes: " + " ".join(s for s in "⌞⌟⌜⌝" if s in used))
    claws = find_claw_cliques(rep)
    print(f"claw cliques: {len(claws)}")
    return 0


def cmd_bounds(args) -> int:
    g = io.read_graph(_read(args.graph))
    b = helly_bend_bounds(g)
    print(f"mu: {b.mu}")
    print(f"lower: {b.lower} (raw {b.raw_lower} = {float(b.raw_lower):g})")
    print(f"upper: {b.upper}")
    return 0


def cmd_degeneracy(args) -> int:
    d, _ = degeneracy(io.read_graph(_read(args.graph)))
    print(f"degeneracy: <={d} (observed {d}-bounded peeling)")
    return 0


def cmd_render(args) -> int:
    rep = io.read_rep(_read(args.rep))
    _emit(render_ascii(rep) if args.ascii else render_svg(rep, args.cell), args.out)
    return 0


def cmd_generate(args) -> int:
    g = generate(args.name, *args.params)
    _emit(io.write_graph(g), args.out)
    return 0


def cmd_cliques(args) -> int:
    for c in maximal_cliques(io.read_graph(_read(args.graph))):
        print(" ".join(map(str, c)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hellyepg", description="EPG representations and the Helly property")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify", help="check a representation against a graph")
    p.add_argument("--rep", default="-")
    p.add_argument("--graph")
    p.add_argument("--formula", help="check against the gadget graph of this formula")
    p.add_argument("--k", type=int)
    p.add_argument("--gilmore", action="store_true", help="use the triple-based Helly check")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("stair", help="stair representation of a graph")
    p.add_argument("--graph", default="-")
    p.add_argument("--order", choices=["best", "lex", "greedy"], default="best")
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_stair)

    p = sub.add_parser("compact", help="shrink a representation's grid")
    p.add_argument("--rep", default="-")
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_compact)

    p = sub.add_parser("reduce", help="gadget graph of a formula")
    p.add_argument("--formula", default="-")
    p.add_argument("--roles", help="also write 'id role kind' lines here")
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("realize", help="single-bend representation from a solution")
    p.add_argument("--formula", default="-")
    p.add_argument("--assignment", help='e.g. "F F T F" or a file; solved if omitted')
    p.add_argument("--no-compact", action="store_true")
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_realize)

    p = sub.add_parser("solve", help="brute-force 1-in-3 solver")
    p.add_argument("--formula", default="-")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("recognize", help="bounded search for a representation")
    p.add_argument("--graph", default="-")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--grid", type=int, default=4)
    p.add_argument("--helly", action="store_true")
    p.add_argument("--max-nodes", type=int, default=5_000_000)
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_recognize)

    p = sub.add_parser("classify-c4", help="pie or frame shape of an induced 4-cycle")
    p.add_argument("--rep", default="-")
    p.add_argument("--cycle", required=True, help="four vertex ids in cyclic order")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("shapes", help="L-shapes used by a single-bend representation")
    p.add_argument("--rep", default="-")
    p.set_defaults(fn=cmd_shapes)

    p = sub.add_parser("bounds", help="Helly bend number bounds from the clique count")
    p.add_argument("--graph", default="-")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("degeneracy", help="min-degree peeling")
    p.add_argument("--graph", default="-")
    p.set_defaults(fn=cmd_degeneracy)

    p = sub.add_parser("render", help="draw a representation")
    p.add_argument("--rep", default="-")
    p.add_argument("--ascii", action="store_true")
    p.add_argument("--cell", type=int, default=40)
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("generate", help="named graphs")
    p.add_argument("name")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("cliques", help="list maximal cliques")
    p.add_argument("--graph", default="-")
    p.set_defaults(fn=cmd_cliques)
    return ap


def cli(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (io.ParseError, BadParameter, NotAOneInThreeSolution, TooManyVariables, NotB1,
            OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(cli())


if __name__ == "__main__":
    main()
