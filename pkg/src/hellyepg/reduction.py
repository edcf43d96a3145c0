"""Positive 1-in-3 3SAT to Helly single-bend EPG.

``build_gf`` builds the gadget graph of a formula, ``realize`` draws a
Helly single-bend representation of it from a satisfying assignment, and
``extract_assignment`` reads an assignment back from any such drawing.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .graphs import GADGET_LABELS, SimpleGraph, gadget_edges
from .grid import path_from_corners
from .representation import (EpgRepresentation, compact, find_claw_cliques,
                             realizes)


class FormulaError(ValueError):
    pass


class FormulaSyntaxError(FormulaError):
    def __init__(self, msg, line=None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line else msg)


class NegativeLiteral(FormulaSyntaxError):
    pass


class ClauseArity(FormulaSyntaxError):
    pass


class VarOutOfRange(FormulaSyntaxError):
    pass


class TooManyVariables(ValueError):
    pass


class NotAOneInThreeSolution(ValueError):
    pass


class NotARealization(ValueError):
    pass


class MixedDirectionIntersection(ValueError):
    pass


@dataclass(frozen=True)
class Formula13:
    num_vars: int
    clauses: tuple  # tuple of (i, j, k), 1-based, distinct

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 1:
            raise FormulaError("need at least one variable")
        for c in self.clauses:
            if len(c) != 3 or len(set(c)) != 3:
                raise ClauseArity(f"clause {c} must have three distinct variables")
            for x in c:
                if not 1 <= x <= self.num_vars:
                    raise VarOutOfRange(f"variable {x} outside 1..{self.num_vars}")

    def is_solution(self, values: Sequence[bool]) -> bool:
        return len(values) == self.num_vars and all(
            sum(values[x - 1] for x in c) == 1 for c in self.clauses)

    def to_text(self) -> str:
        lines = [f"p p13sat {self.num_vars} {len(self.clauses)}"]
        lines += [f"{a} {b} {c} 0" for a, b, c in self.clauses]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Assignment13:
    values: tuple  # values[j - 1] is the value of variable j

    def __getitem__(self, j: int) -> bool:
        return self.values[j - 1]

    def __len__(self):
        return len(self.values)

    def to_text(self) -> str:
        return " ".join("T" if v else "F" for v in self.values)

    @classmethod
    def parse(cls, text: str) -> "Assignment13":
        vals = []
        for tok in text.split():
            t = tok.upper()
            if t in ("T", "TRUE", "1"):
                vals.append(True)
            elif t in ("F", "FALSE", "0"):
                vals.append(False)
            else:
                raise FormulaSyntaxError(f"bad truth value {tok!r}")
        if not vals:
            raise FormulaSyntaxError("empty assignment")
        return cls(tuple(vals))


def parse_formula(text: str) -> Formula13:
    header = None
    clauses = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "p":
            if header is not None:
                raise FormulaSyntaxError("second header", no)
            if len(toks) != 4 or toks[1] != "p13sat":
                raise FormulaSyntaxError("header must be 'p p13sat <nvars> <nclauses>'", no)
            try:
                header = (int(toks[2]), int(toks[3]))
            except ValueError:
                raise FormulaSyntaxError("header counts must be integers", no) from None
            if header[0] < 1 or header[1] < 0:
                raise FormulaSyntaxError("header counts out of range", no)
            continue
        if header is None:
            raise FormulaSyntaxError("clause before header", no)
        if not all(re.fullmatch(r"-?\d+", t) for t in toks):
            raise FormulaSyntaxError(f"non-integer token in {line!r}", no)
        nums = [int(t) for t in toks]
        if nums[-1] != 0:
            raise FormulaSyntaxError("clause must end with 0", no)
        lits = nums[:-1]
        if any(x < 0 for x in lits):
            raise NegativeLiteral(f"negative literal in {line!r}", no)
        if 0 in lits:
            raise FormulaSyntaxError("0 inside clause", no)
        if len(lits) != 3 or len(set(lits)) != 3:
            raise ClauseArity(f"clause {lits} must have three distinct variables", no)
        for x in lits:
            if x > header[0]:
                raise VarOutOfRange(f"variable {x} exceeds {header[0]}", no)
        clauses.append(tuple(lits))
    if header is None:
        raise FormulaSyntaxError("missing header")
    if len(clauses) != header[1]:
        raise FormulaSyntaxError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return Formula13(header[0], tuple(clauses))


SOLVER_CAP = 24


def solve_1in3(f: Formula13, cap: int = SOLVER_CAP) -> Optional[Assignment13]:
    """First solution in lexicographic order with True ranked before False."""
    n = f.num_vars
    if n > cap:
        raise TooManyVariables(f"{n} variables exceed the brute-force cap of {cap}")
    if not f.clauses:
        return Assignment13((True,) * n)
    cls = np.array(f.clauses, dtype=np.int64) - 1
    shifts = (n - 1 - cls).astype(np.uint64)
    chunk = 1 << min(n, 20)
    for lo in range(0, 1 << n, chunk):
        t = np.arange(lo, min(lo + chunk, 1 << n), dtype=np.uint64)
        # bit 0 means True, so counting upward walks the T-first order
        bits = (t[:, None, None] >> shifts[None, :, :]) & np.uint64(1)
        ok = ((1 - bits.astype(np.int8)).sum(axis=2) == 1).all(axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            w = int(t[hits[0]])
            return Assignment13(tuple(((w >> (n - 1 - j)) & 1) == 0 for j in range(n)))
    return None


# ---------------------------------------------------------------- G_F

@dataclass(frozen=True)
class GadgetGraph:
    graph: SimpleGraph
    roles: tuple  # role tag per vertex
    formula: Formula13

    def vertex(self, role: str) -> int:
        return self._index()[role]

    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {r: i for i, r in enumerate(self.roles)}
            object.__setattr__(self, "_idx", idx)
        return idx


def expected_vertex_count(num_vars: int, num_clauses: int) -> int:
    return 12 * num_clauses + 25 * num_vars + 55


def expected_edge_count(f: Formula13) -> int:
    # H copies, K_{2,4}, T to v_j and V, triangle attachments, V to d, v_j to clause ears
    n_h = len(f.clauses) + 2 * f.num_vars + 4
    return 20 * n_h + 8 + (f.num_vars + 1) + 3 * (2 * f.num_vars + 4) + 4 * len(f.clauses)


def role_kind(role: str) -> str:
    if role in ("T", "V"):
        return role
    head = role.split(".")[0]
    if head == "K24":
        return "K24"
    if head in ("B1", "B2", "B3", "B4"):
        return "base"
    if head.startswith("C"):
        return "clause"
    if "." in role:
        return "variable-gadget"
    return "variable"


CLAUSE_EARS = ("a", "e", "h")


def build_gf(f: Formula13) -> GadgetGraph:
    roles: list[str] = []
    edges: list[tuple[int, int]] = []

    def add(role):
        roles.append(role)
        return len(roles) - 1

    def add_h(prefix):
        ids = {lab: add(f"{prefix}.{lab}") for lab in GADGET_LABELS}
        edges.extend((ids[u], ids[v]) for u, v in gadget_edges())
        return ids

    t = add("T")
    vv = add("V")
    s1, s2 = add("K24.s1"), add("K24.s2")
    ks = [add(f"K24.k{i}") for i in (1, 2, 3)]
    for s in (s1, s2):
        for x in [t] + ks:
            edges.append((s, x))
    base = [add_h(f"B{i}") for i in (1, 2, 3, 4)]
    for host, gadgets in ((t, base[:2]), (vv, base[2:])):
        for hg in gadgets:
            edges.extend((host, hg[lab]) for lab in "abc")
    edges.append((t, vv))

    var = {}
    for j in range(1, f.num_vars + 1):
        v = add(f"x{j}")
        var[j] = v
        edges.append((t, v))
        for part in ("H1", "H2"):
            hg = add_h(f"x{j}.{part}")
            edges.extend((v, hg[lab]) for lab in "abc")

    for i, clause in enumerate(f.clauses, start=1):
        hg = add_h(f"C{i}")
        edges.append((vv, hg["d"]))
        for x, ear in zip(clause, CLAUSE_EARS):
            edges.append((var[x], hg[ear]))

    g = SimpleGraph.from_edges(len(roles), edges, roles)
    return GadgetGraph(g, tuple(roles), f)


# ---------------------------------------------------------------- layout

RIGHT, UP, LEFT, DOWN = (1, 0), (0, 1), (-1, 0), (0, -1)
# H's 4-cycle b-c-g-f; each consecutive pair shares one ray and owns two ears
PAIRS = (("bc", "b", "c", "a"), ("cg", "c", "g", "e"), ("fg", "g", "f", "h"), ("bf", "f", "b", "d"))


def _ccw(d):
    return (-d[1], d[0])


def _add(p, d, k=1):
    return (p[0] + d[0] * k, p[1] + d[1] * k)


class _Canvas:
    """Collects raw corner lists by role; coordinates may be negative."""

    def __init__(self):
        self.raw: dict = {}

    def put(self, role, corners):
        if role in self.raw:
            raise AssertionError(f"role {role} drawn twice")
        self.raw[role] = [tuple(c) for c in corners]

    def h_gadget(self, prefix, center, dirs, lengths=None, outer=None):
        """Draw a copy of H as a pie at ``center``.

        ``dirs`` maps each pair name (bc, cg, fg, bf) to a ray direction.
        On a ray of length L the inner ear holds edge 1 and turns aside,
        and the outer ear holds edge L; ``outer`` can replace an outer
        ear's corners so it reaches an outside path.
        """
        lengths = lengths or {}
        outer = outer or {}
        ends = {}
        for pair, p, q, ear in PAIRS:
            d = dirs[pair]
            L = lengths.get(pair, 2)
            ends[pair] = _add(center, d, L)
            near = _add(center, d)
            self.put(f"{prefix}.{pair}", [center, near, _add(near, _ccw(d))])
            self.put(f"{prefix}.{ear}", outer.get(pair) or [_add(center, d, L - 1), ends[pair]])
        for lab, (r1, r2) in (("b", ("bf", "bc")), ("c", ("bc", "cg")),
                              ("g", ("cg", "fg")), ("f", ("fg", "bf"))):
            self.put(f"{prefix}.{lab}", [ends[r1], center, ends[r2]])


def _true_pie_dirs(bc_dir):
    d = bc_dir
    return {"bc": d, "cg": _ccw(d), "fg": _ccw(_ccw(d)), "bf": _ccw(_ccw(_ccw(d)))}


def clause_dirs(position_true: int, upper_pair_first: bool) -> dict:
    """Ray directions for a clause gadget.

    The d ear points left toward V and the true variable's ear points right.
    The two false variables' ears point up and down; ``upper_pair_first``
    says the earlier of them in the clause has the upper row.
    """
    true_pair = PAIRS[position_true][0]
    false_pairs = [PAIRS[k][0] for k in range(3) if k != position_true]
    up, down = (false_pairs if upper_pair_first else false_pairs[::-1])
    return {"bf": LEFT, true_pair: RIGHT, up: UP, down: DOWN}


def pie_kind(position_true: int) -> str:
    return "TruePie" if position_true == 1 else "FalsePie"


@dataclass(frozen=True)
class LayoutInfo:
    x_v: int
    true_cols: dict
    false_rows: dict
    clause_centers: tuple


def _layout(f: Formula13, a: Assignment13):
    m = len(f.clauses)
    sx = sy = 3 * m + 9
    cv = _Canvas()

    # K_{2,4}: false pies at (0,0) (T, k1) and at (-3,3) (k2, k3)
    cv.put("K24.s1", [(-3, 4), (-3, 0), (1, 0)])
    cv.put("K24.s2", [(0, -1), (0, 3), (-4, 3)])
    cv.put("K24.k1", [(-1, 0), (0, 0), (0, 1)])
    cv.put("K24.k2", [(-3, 2), (-3, 3), (-2, 3)])
    cv.put("K24.k3", [(-3, 4), (-3, 3), (-4, 3)])

    trues = [j for j in range(1, f.num_vars + 1) if a[j]]
    falses = [j for j in range(1, f.num_vars + 1) if not a[j]]
    x_v = 8
    true_cols = {j: x_v + (k + 1) * sx for k, j in enumerate(trues)}
    false_rows = {j: -6 - k * sy for k, j in enumerate(falses)}
    x_right = max([x_v] + list(true_cols.values())) + 8
    y_low = min([-6] + list(false_rows.values()))
    y_hosts = y_low - 8
    y_b2 = y_hosts - 8

    cv.put("T", [(x_right - 1, 0), (0, 0), (0, y_b2 + 1)])
    cv.h_gadget("B1", (x_right, 0), _true_pie_dirs(LEFT))
    cv.h_gadget("B2", (0, y_b2), _true_pie_dirs(UP))

    # V and true variables: one unit edge on T's row, then down their column
    for role, col, top, bottom in [("V", x_v, "B3", "B4")] + [
            (f"x{j}", c, f"x{j}.H2", f"x{j}.H1") for j, c in true_cols.items()]:
        cv.put(role, [(col - 1, 0), (col, 0), (col, y_hosts + 1)])
        cv.h_gadget(top, (col, 2), _true_pie_dirs(DOWN), lengths={"bc": 3})
        cv.h_gadget(bottom, (col, y_hosts), _true_pie_dirs(UP))

    # false variables: one unit edge on T's column, then right along their row
    for j, row in false_rows.items():
        cv.put(f"x{j}", [(0, row + 1), (0, row), (x_right - 1, row)])
        cv.h_gadget(f"x{j}.H2", (-2, row), _true_pie_dirs(RIGHT), lengths={"bc": 3})
        cv.h_gadget(f"x{j}.H1", (x_right, row), _true_pie_dirs(LEFT))

    centers = []
    for i, clause in enumerate(f.clauses, start=1):
        pos_true = [k for k, x in enumerate(clause) if a[x]]
        if len(pos_true) != 1:
            raise NotAOneInThreeSolution(f"clause {i} {clause} has {len(pos_true)} true members")
        pt = pos_true[0]
        fvars = [clause[k] for k in range(3) if k != pt]
        r0, r1 = false_rows[fvars[0]], false_rows[fvars[1]]
        upper_first = r0 > r1
        y_top, y_bot = max(r0, r1), min(r0, r1)
        cx, cy = x_v + 3 * i, y_top - 3 * i
        centers.append((cx, cy))
        dirs = clause_dirs(pt, upper_first)
        xt = true_cols[clause[pt]]
        true_pair = PAIRS[pt][0]
        up_pair = [p for p, d in dirs.items() if d == UP][0]
        down_pair = [p for p, d in dirs.items() if d == DOWN][0]
        outer = {
            "bf": [(cx - 1, cy), (x_v, cy), (x_v, cy - 1)],
            true_pair: [(cx + 1, cy), (xt, cy), (xt, cy - 1)],
            up_pair: [(cx, cy + 1), (cx, y_top), (cx + 1, y_top)],
            down_pair: [(cx, cy - 1), (cx, y_bot), (cx + 1, y_bot)],
        }
        cv.h_gadget(f"C{i}", (cx, cy), dirs, outer=outer)

    info = LayoutInfo(x_v, true_cols, false_rows, tuple(centers))
    return cv.raw, info


def realize(f: Formula13, a: Assignment13, do_compact: bool = True) -> EpgRepresentation:
    """Helly single-bend representation of ``build_gf(f)`` from a solution ``a``."""
    if len(a) != f.num_vars:
        raise NotAOneInThreeSolution(f"assignment has {len(a)} values, formula has {f.num_vars} variables")
    if not f.is_solution(a.values):
        raise NotAOneInThreeSolution("assignment does not make exactly one member of every clause true")
    raw, _ = _layout(f, a)
    gg = build_gf(f)
    missing = set(gg.roles) - set(raw)
    if missing:
        raise AssertionError(f"layout misses roles {sorted(missing)[:5]}")
    lx = min(x for cs in raw.values() for x, _ in cs)
    ly = min(y for cs in raw.values() for _, y in cs)
    paths = [path_from_corners([(x - lx, y - ly) for x, y in raw[r]]) for r in gg.roles]
    rep = EpgRepresentation.fitted(paths)
    return compact(rep) if do_compact else rep


def _direction_set(edges) -> set:
    return {e.dir for e in edges}


def intersection_direction(rep: EpgRepresentation, u: int, v: int) -> str:
    dirs = _direction_set(rep.paths[u].edges & rep.paths[v].edges)
    if not dirs:
        raise NotARealization(f"paths {u} and {v} do not intersect")
    if len(dirs) > 1:
        raise MixedDirectionIntersection(f"paths {u} and {v} share edges of both directions")
    return dirs.pop()


def extract_assignment(rep: EpgRepresentation, g: GadgetGraph) -> Assignment13:
    """Read variable values off the direction of each v_j's intersection with T."""
    verdict = realizes(rep, g.graph, 1)
    if not verdict:
        raise NotARealization(verdict.reason)
    claws = find_claw_cliques(rep)
    if claws:
        raise NotARealization(f"not Helly: {claws[0]}")
    t, vv = g.vertex("T"), g.vertex("V")
    ref = intersection_direction(rep, vv, t)
    vals = tuple(intersection_direction(rep, g.vertex(f"x{j}"), t) == ref
                 for j in range(1, g.formula.num_vars + 1))
    if not g.formula.is_solution(vals):
        raise NotARealization("extracted values do not solve the formula")
    return Assignment13(vals)


def ear_directions(rep: EpgRepresentation, g: GadgetGraph, clause: int) -> dict:
    """Direction of each clause ear's overlap with its two cycle paths."""
    out = {}
    for pair, p, q, ear in PAIRS:
        e = g.vertex(f"C{clause}.{ear}")
        out[ear] = intersection_direction(rep, e, g.vertex(f"C{clause}.{p}"))
    return out


def rotate_rep(rep: EpgRepresentation) -> EpgRepresentation:
    """Quarter turn counterclockwise, keeping coordinates non-negative."""
    h = rep.height
    paths = [path_from_corners([(h - 1 - y, x) for x, y in p.corners]) for p in rep.paths]
    return EpgRepresentation(rep.height, rep.width, tuple(paths))


def random_formula(rng: random.Random, max_vars: int = 8, max_clauses: int = 6,
                   satisfiable: bool = True, tries: int = 1000) -> tuple[Formula13, Optional[Assignment13]]:
    """Random positive 3-CNF; with ``satisfiable`` it is resampled until solvable."""
    for _ in range(tries):
        n = rng.randint(3, max_vars)
        m = rng.randint(1, max_clauses)
        clauses = tuple(tuple(rng.sample(range(1, n + 1), 3)) for _ in range(m))
        f = Formula13(n, clauses)
        sol = solve_1in3(f)
        if sol is not None or not satisfiable:
            return f, sol
    raise RuntimeError("no satisfiable formula found")


DEMO_TEXT = "p p13sat 4 3\n1 2 3 0\n2 3 4 0\n3 1 4 0\n"


def demo_formula() -> Formula13:
    return parse_formula(DEMO_TEXT)
