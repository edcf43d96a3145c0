"""EPG representations and the checks run on them.

Covers realization checks, the two Helly verifiers (maximal cliques and
Gilmore triples over relevant edges), the claw scan for single-bend
representations, classification of induced 4-cycles, L-shape usage and
grid compaction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .graphs import SimpleGraph, maximal_cliques
from .grid import GridEdge, GridPoint, H, LatticePath, V, path_from_corners


class RepresentationError(ValueError):
    pass


class SizeMismatch(RepresentationError):
    pass


class NotB1(RepresentationError):
    pass


class UnclassifiableC4(RepresentationError):
    pass


@dataclass(frozen=True)
class EpgRepresentation:
    """Paths on a ``width`` x ``height`` grid of points; vertex ``i`` is ``paths[i]``."""

    width: int
    height: int
    paths: tuple

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        for i, p in enumerate(self.paths):
            mx, my = p.max_xy()
            lx, ly = p.min_xy()
            if lx < 0 or ly < 0 or mx >= self.width or my >= self.height:
                raise RepresentationError(f"path {i} leaves the {self.width}x{self.height} grid")

    @classmethod
    def fitted(cls, paths: Sequence[LatticePath]) -> "EpgRepresentation":
        """Smallest grid anchored at the origin that holds ``paths``."""
        if not paths:
            return cls(0, 0, ())
        w = max(p.max_xy()[0] for p in paths) + 1
        h = max(p.max_xy()[1] for p in paths) + 1
        return cls(w, h, tuple(paths))

    @property
    def n(self) -> int:
        return len(self.paths)

    def bends(self) -> list[int]:
        return [p.bends for p in self.paths]

    def max_bends(self) -> int:
        return max(self.bends(), default=0)

    def edge_index(self) -> dict:
        """Grid edge -> bitmask of the paths that contain it."""
        idx: dict = {}
        for i, p in enumerate(self.paths):
            bit = 1 << i
            for e in p.edges:
                idx[e] = idx.get(e, 0) | bit
        return idx


def intersection_graph(rep: EpgRepresentation) -> SimpleGraph:
    edges = set()
    for mask in rep.edge_index().values():
        ids = _bits(mask)
        for u, v in combinations(ids, 2):
            edges.add((u, v))
    return SimpleGraph.from_edges(rep.n, edges)


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def realizes(rep: EpgRepresentation, g: SimpleGraph, k: int) -> Verdict:
    if rep.n != g.n:
        raise SizeMismatch(f"representation has {rep.n} paths, graph has {g.n} vertices")
    for i, p in enumerate(rep.paths):
        if p.bends > k:
            return Verdict(False, f"BendBudget: path {i} has {p.bends} bends > {k}")
    ig = intersection_graph(rep)
    for u in range(g.n):
        extra = ig.adj[u] - g.adj[u]
        missing = g.adj[u] - ig.adj[u]
        if extra:
            return Verdict(False, f"ExtraEdge: paths {u} and {min(extra)} intersect but are not adjacent")
        if missing:
            return Verdict(False, f"MissingEdge: vertices {u} and {min(missing)} are adjacent but paths are disjoint")
    return Verdict(True, "")


# ---------------------------------------------------------------- Helly

EMPTY_CORE = "EmptyCoreClique"
CLAW = "ClawClique"


@dataclass(frozen=True)
class HellyViolation:
    members: tuple
    kind: str = EMPTY_CORE
    center: Optional[GridPoint] = None
    claw_edges: Optional[tuple] = None

    def __str__(self):
        s = f"{self.kind} members={list(self.members)}"
        if self.center is not None:
            s += f" center={tuple(self.center)} edges={[str(e) for e in self.claw_edges]}"
        return s


@dataclass(frozen=True)
class HellyVerdict:
    helly: bool
    witness: Optional[HellyViolation] = None

    def __bool__(self):
        return self.helly


def core(rep: EpgRepresentation, members: Iterable[int], full: bool = False) -> frozenset:
    """Common edges of the member paths.

    By default only relevant edges of the members are tried as candidates,
    which decides emptiness correctly for pairwise intersecting families.
    ``full`` intersects the complete edge sets instead.
    """
    ms = list(members)
    if not ms:
        return frozenset()
    paths = [rep.paths[i] for i in ms]
    if full:
        out = paths[0].edges
        for p in paths[1:]:
            out = out & p.edges
        return out
    cands = set()
    for p in paths:
        cands |= p.relevant_set
    return frozenset(e for e in cands if all(e in p.edges for p in paths))


def _core_empty(rep, members, full=False) -> bool:
    return not core(rep, members, full)


def _minimize(rep, members: Sequence[int], full=False) -> tuple:
    """Greedy shrink to an inclusion-minimal subset with empty core."""
    cur = list(members)
    changed = True
    while changed:
        changed = False
        for v in sorted(cur, reverse=True):
            trial = [u for u in cur if u != v]
            if len(trial) >= 2 and _core_empty(rep, trial, full):
                cur = trial
                changed = True
                break
    return tuple(sorted(cur))


def helly_by_cliques(rep: EpgRepresentation, debug_full: bool = False) -> HellyVerdict:
    """Helly iff every maximal clique of the intersection graph has a common edge."""
    g = intersection_graph(rep)
    bad = []
    for clique in maximal_cliques(g):
        if len(clique) < 3:
            continue
        empty = _core_empty(rep, clique)
        if debug_full:
            full_empty = _core_empty(rep, clique, full=True)
            if full_empty != empty:
                raise AssertionError(f"relevant-edge core disagrees with full core on {clique}")
        if empty:
            bad.append(_minimize(rep, clique))
    if not bad:
        return HellyVerdict(True)
    return HellyVerdict(False, HellyViolation(min(bad)))


def _relevant_pool(rep: EpgRepresentation) -> list:
    pool = set()
    for p in rep.paths:
        pool |= p.relevant_set
    return sorted(pool)


def _gilmore_core_empty(rep, mask, cover, cache) -> bool:
    hit = cache.get(mask)
    if hit is None:
        hit = True
        for i in _bits(mask):
            for e in rep.paths[i].relevant_set:
                if cover.get(e, 0) & mask == mask:
                    hit = False
                    break
            if not hit:
                break
        cache[mask] = hit
    return hit


def helly_by_gilmore(rep: EpgRepresentation, reference: bool = False) -> HellyVerdict:
    """Gilmore's criterion over triples of relevant edges.

    For each triple, the paths holding at least two of its edges must share
    an edge.  ``reference`` scans every triple of the relevant-edge pool; the
    default only visits triples whose three pairs each lie on some path,
    since otherwise one edge of the triple is common to all such paths.
    """
    pool = _relevant_pool(rep)
    cover = rep.edge_index()
    cache: dict = {}
    worst = None

    def check(x1, x2, x3):
        nonlocal worst
        c1, c2, c3 = cover[x1], cover[x2], cover[x3]
        mask = (c1 & c2) | (c1 & c3) | (c2 & c3)
        if mask.bit_count() < 3:
            return
        if _gilmore_core_empty(rep, mask, cover, cache):
            members = tuple(_bits(mask))
            if worst is None or members < worst:
                worst = members

    if reference:
        for x1, x2, x3 in combinations(pool, 3):
            check(x1, x2, x3)
    else:
        order = {e: i for i, e in enumerate(pool)}
        near: dict = {e: set() for e in pool}
        for p in rep.paths:
            on = [e for e in p.edges if e in order]
            for e in on:
                near[e].update(on)
        for x1 in pool:
            i1 = order[x1]
            n1 = {e for e in near[x1] if order[e] > i1}
            for x2 in sorted(n1, key=order.get):
                i2 = order[x2]
                for x3 in n1 & near[x2]:
                    if order[x3] > i2:
                        check(x1, x2, x3)
    if worst is None:
        return HellyVerdict(True)
    return HellyVerdict(False, HellyViolation(worst))


def _require_b1(rep: EpgRepresentation):
    for i, p in enumerate(rep.paths):
        if p.bends > 1:
            raise NotB1(f"path {i} has {p.bends} bends")


def _incident_edges(pt: GridPoint) -> list[GridEdge]:
    x, y = pt
    out = [GridEdge(x, y, H), GridEdge(x, y, V)]
    if x > 0:
        out.append(GridEdge(x - 1, y, H))
    if y > 0:
        out.append(GridEdge(x, y - 1, V))
    return sorted(out)


def find_claw_cliques(rep: EpgRepresentation) -> list[HellyViolation]:
    """Claw cliques of a single-bend representation.

    At every grid point with at least three path-edge incidences, and for
    each choice of three incident edges, the paths holding two of them are
    reported when there are at least three and they share no edge.
    """
    _require_b1(rep)
    cover = rep.edge_index()
    touch: dict = {}
    for e in cover:
        for pt in e.endpoints:
            touch[pt] = touch.get(pt, 0) + bin(cover[e]).count("1")
    out = []
    for pt in sorted(p for p, c in touch.items() if c >= 3):
        inc = [e for e in _incident_edges(pt) if e in cover]
        for claw in combinations(inc, 3):
            c1, c2, c3 = (cover[e] for e in claw)
            mask = (c1 & c2) | (c1 & c3) | (c2 & c3)
            if mask.bit_count() < 3:
                continue
            members = tuple(_bits(mask))
            if _core_empty(rep, members):
                out.append(HellyViolation(members, CLAW, pt, tuple(claw)))
    return out


# ---------------------------------------------------------------- shapes

SHAPE_BL = "⌞"  # arms right and up
SHAPE_BR = "⌟"  # arms left and up
SHAPE_TL = "⌜"  # arms right and down
SHAPE_TR = "⌝"  # arms left and down
SHAPES = (SHAPE_BL, SHAPE_BR, SHAPE_TL, SHAPE_TR)
# quarter turn counterclockwise
ROTATE = {SHAPE_BL: SHAPE_BR, SHAPE_BR: SHAPE_TR, SHAPE_TR: SHAPE_TL, SHAPE_TL: SHAPE_BL}


def shape_of(path: LatticePath) -> str:
    """L-shape of a path with at most one bend; straight paths count as ⌞."""
    if path.bends == 0:
        return SHAPE_BL
    if path.bends > 1:
        raise NotB1(f"path {path} has {path.bends} bends")
    a, b, c = path.corners
    arms = set()
    for q in (a, c):
        if q.x != b.x:
            arms.add("R" if q.x > b.x else "L")
        else:
            arms.add("U" if q.y > b.y else "D")
    return {frozenset("RU"): SHAPE_BL, frozenset("LU"): SHAPE_BR,
            frozenset("RD"): SHAPE_TL, frozenset("LD"): SHAPE_TR}[frozenset(arms)]


def shapes_used(rep: EpgRepresentation) -> frozenset:
    _require_b1(rep)
    return frozenset(shape_of(p) for p in rep.paths)


def fits_shape_class(rep: EpgRepresentation, allowed: Iterable[str]) -> bool:
    """Whether every bent path uses a shape of ``allowed`` under one common rotation.

    Straight paths are degenerate versions of every shape and never block.
    """
    _require_b1(rep)
    used = {shape_of(p) for p in rep.paths if p.bends == 1}
    cur = set(allowed)
    for _ in range(4):
        if used <= cur:
            return True
        cur = {ROTATE[s] for s in cur}
    return False


@dataclass(frozen=True)
class C4Shape:
    tag: str  # TruePie, FalsePie or Frame
    center: Optional[GridPoint] = None
    corners: Optional[tuple] = None  # bend point per cycle position, for frames
    square: bool = False

    def __str__(self):
        if self.tag == "Frame":
            return f"Frame(square={self.square}, corners={[tuple(c) for c in self.corners]})"
        return f"{self.tag}(center={tuple(self.center)})"


def _interior_points(p: LatticePath) -> set:
    pts = set()
    for e in p.edge_list:
        pts.update(e.endpoints)
    pts.discard(p.start)
    pts.discard(p.end)
    return pts


def _incident_on(p: LatticePath, pt: GridPoint) -> frozenset:
    return frozenset(e for e in _incident_edges(pt) if e in p.edges)


def classify_c4(rep: EpgRepresentation, cycle: Sequence[int]) -> C4Shape:
    """Classify how an induced 4-cycle ``cycle`` (in cyclic order) is drawn."""
    if len(cycle) != 4 or len(set(cycle)) != 4:
        raise UnclassifiableC4("need four distinct vertices")
    ps = [rep.paths[v] for v in cycle]
    for v, p in zip(cycle, ps):
        if p.bends > 1:
            raise NotB1(f"path {v} has {p.bends} bends")
    for i in range(4):
        if not (ps[i].edges & ps[(i + 1) % 4].edges):
            raise UnclassifiableC4(f"paths {cycle[i]} and {cycle[(i + 1) % 4]} do not intersect")
    if ps[0].edges & ps[2].edges or ps[1].edges & ps[3].edges:
        raise UnclassifiableC4("the vertices do not induce a 4-cycle")

    common = _interior_points(ps[0])
    for p in ps[1:]:
        common &= _interior_points(p)
    for b in sorted(common):
        used = [_incident_on(p, b) for p in ps]
        if len(set(used)) != 4:
            continue
        bent = [b in p.bend_points for p in ps]
        if all(bent):
            return C4Shape("TruePie", center=b)
        if sum(bent) == 2:
            i, j = [k for k in range(4) if bent[k]]
            if not (used[i] & used[j]):
                return C4Shape("FalsePie", center=b)

    if all(p.bends == 1 for p in ps):
        pts = [p.corners[1] for p in ps]
        xs = sorted({q.x for q in pts})
        ys = sorted({q.y for q in pts})
        if len(set(pts)) == 4 and len(xs) == 2 and len(ys) == 2:
            sides_ok = all(
                (pts[i].x == pts[(i + 1) % 4].x) != (pts[i].y == pts[(i + 1) % 4].y)
                for i in range(4)
            )
            if sides_ok:
                want = {GridPoint(xs[0], ys[0]): SHAPE_BL, GridPoint(xs[1], ys[0]): SHAPE_BR,
                        GridPoint(xs[0], ys[1]): SHAPE_TL, GridPoint(xs[1], ys[1]): SHAPE_TR}
                square = all(shape_of(p) == want[q] for p, q in zip(ps, pts))
                return C4Shape("Frame", corners=tuple(pts), square=square)
    raise UnclassifiableC4(f"cycle {list(cycle)} is neither a pie nor a frame")


# ---------------------------------------------------------------- compaction

def _remap(paths, fx, fy):
    return tuple(path_from_corners([(fx[x], fy[y]) for x, y in p.corners]) for p in paths)


def _keep_map(size, keep):
    out, nxt = {}, -1
    for c in range(size):
        if c in keep:
            nxt += 1
        out[c] = max(nxt, 0)
    return out


def _compact_once(rep: EpgRepresentation) -> EpgRepresentation:
    if rep.n == 0:
        return EpgRepresentation(0, 0, ())
    lx = min(p.min_xy()[0] for p in rep.paths)
    ly = min(p.min_xy()[1] for p in rep.paths)
    paths = [p.translated(-lx, -ly) for p in rep.paths]
    w = max(p.max_xy()[0] for p in paths) + 1
    h = max(p.max_xy()[1] for p in paths) + 1

    # a column survives if it carries a vertical edge, or a relevant
    # horizontal edge enters it from the left; rows likewise
    keep_x, keep_y = {0}, {0}
    for p in paths:
        for e in p.edges:
            if e.dir == V:
                keep_x.add(e.x)
            else:
                keep_y.add(e.y)
        for e in p.relevant_set:
            if e.dir == H:
                keep_x.add(e.x + 1)
            else:
                keep_y.add(e.y + 1)
    fx = _keep_map(w, keep_x)
    fy = _keep_map(h, keep_y)
    return EpgRepresentation.fitted(_remap(paths, fx, fy))


def compact(rep: EpgRepresentation) -> EpgRepresentation:
    """Shrink the grid while keeping adjacency, bends and the Helly verdict.

    Translates to the origin, then deletes every column that holds no
    vertical edge and that no relevant horizontal edge enters from the
    left (and the same for rows), repeating until nothing changes.
    """
    cur = rep
    while True:
        nxt = _compact_once(cur)
        if nxt == cur:
            return nxt
        cur = nxt
