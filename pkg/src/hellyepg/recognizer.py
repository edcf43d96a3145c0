"""Exhaustive search for small B_k-EPG (optionally Helly) representations.

Vertices are placed in descending-degree order.  Each candidate path is
checked against the paths already placed with precomputed intersection
bitsets, so one placement costs a couple of big-int operations.  Helly
pruning checks, after each placement, that every triangle closed by the new
path still has a common edge; the finished representation is then checked
with the maximal-clique verifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import SimpleGraph
from .grid import GridPoint, LatticePath, path_from_corners
from .representation import EpgRepresentation, helly_by_cliques


class BudgetExceeded(RuntimeError):
    pass


MAX_DIM = 8
MAX_K = 2


@dataclass(frozen=True)
class SearchBudget:
    max_grid: int = 4  # grid is max_grid x max_grid points
    max_k: int = 1
    max_nodes: int = 5_000_000
    require_helly: bool = False

    def __post_init__(self):
        if self.max_grid < 1 or self.max_k < 0 or self.max_nodes < 1:
            raise ValueError("budget caps must be positive")

    def covers_bound(self, n: int) -> bool:
        """Whether the grid is large enough for completeness on n vertices."""
        return self.max_grid >= 4 * n * (self.max_k + 1)


@dataclass(frozen=True)
class Found:
    rep: EpgRepresentation
    nodes: int


@dataclass(frozen=True)
class NotFoundWithinBudget:
    nodes: int


@dataclass(frozen=True)
class ExhaustedNo:
    """The whole budgeted grid was searched without success.

    ``covers_bound`` tells whether that grid meets the size bound that makes
    the answer a proof of non-representability.
    """

    nodes: int
    covers_bound: bool


def enumerate_paths(width: int, height: int, k: int) -> list[LatticePath]:
    """All paths with at most ``k`` bends in a width x height grid of points."""
    if k < 0 or k > MAX_K or width > MAX_DIM or height > MAX_DIM:
        raise BudgetExceeded(f"enumeration limited to k <= {MAX_K} and {MAX_DIM}x{MAX_DIM} grids")
    pts = [GridPoint(x, y) for x in range(width) for y in range(height)]
    found = set()

    def extend(corners, bends_left):
        last = corners[-1]
        if len(corners) >= 2:
            prev = corners[-2]
            horiz = prev.y == last.y
            dirs = [(0, 1), (0, -1)] if horiz else [(1, 0), (-1, 0)]
        else:
            dirs = [(1, 0), (-1, 0), (0, 1), (0, -1)]
        for dx, dy in dirs:
            x, y = last.x + dx, last.y + dy
            while 0 <= x < width and 0 <= y < height:
                nxt = corners + [GridPoint(x, y)]
                try:
                    p = path_from_corners(nxt)
                except ValueError:
                    break
                found.add(p)
                if bends_left > 0:
                    extend(nxt, bends_left - 1)
                x, y = x + dx, y + dy

    for p in pts:
        extend([p], k)
    return sorted(found, key=lambda q: (q.bends, q.corners))


def _search(g: SimpleGraph, budget: SearchBudget, stats: dict):
    """Yield lists of chosen paths; ``stats["nodes"]`` counts placements tried."""
    n = g.n
    w = h = budget.max_grid
    paths = enumerate_paths(w, h, budget.max_k)
    np_ = len(paths)
    edge_bit: dict = {}
    for i, p in enumerate(paths):
        for e in p.edges:
            edge_bit[e] = edge_bit.get(e, 0) | (1 << i)
    inter = []
    for i, p in enumerate(paths):
        m = 0
        for e in p.edges:
            m |= edge_bit[e]
        inter.append(m)
    full = (1 << np_) - 1

    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    earlier_nb = [[u for u in order[:i] if g.has_edge(order[i], u)] for i in range(n)]
    earlier_non = [[u for u in order[:i] if not g.has_edge(order[i], u)] for i in range(n)]
    # triangles closed at step i: pairs of earlier neighbours that are adjacent
    closing = [[(u, w_) for a, u in enumerate(earlier_nb[i]) for w_ in earlier_nb[i][a + 1:]
                if g.has_edge(u, w_)] for i in range(n)]

    chosen = [None] * n
    stats["nodes"] = 0

    def triangle_ok(v, u, x):
        common = paths[chosen[v]].edges & paths[chosen[u]].edges & paths[chosen[x]].edges
        return bool(common)

    def rec(i):
        if i == n:
            yield None
            return
        v = order[i]
        allowed = full
        for u in earlier_nb[i]:
            allowed &= inter[chosen[u]]
        for u in earlier_non[i]:
            allowed &= ~inter[chosen[u]]
        while allowed:
            low = allowed & -allowed
            c = low.bit_length() - 1
            allowed ^= low
            stats["nodes"] += 1
            if stats["nodes"] > budget.max_nodes:
                raise BudgetExceeded("node budget exhausted")
            chosen[v] = c
            if budget.require_helly and not all(triangle_ok(v, u, x) for u, x in closing[i]):
                continue
            yield from rec(i + 1)
        chosen[v] = None

    for _ in rec(0):
        yield [paths[c] for c in chosen]


def _canonical_key(sel) -> tuple:
    lx = min(p.min_xy()[0] for p in sel)
    ly = min(p.min_xy()[1] for p in sel)
    return tuple(p.translated(-lx, -ly).corners for p in sel)


def _accept(sel, budget) -> Optional[EpgRepresentation]:
    rep = EpgRepresentation(budget.max_grid, budget.max_grid, tuple(sel))
    if budget.require_helly and not helly_by_cliques(rep):
        return None
    return rep


def recognize_bk(g: SimpleGraph, budget: SearchBudget):
    """Find one representation within ``budget``.

    Returns Found, NotFoundWithinBudget (node cap hit) or ExhaustedNo.
    """
    stats: dict = {}
    try:
        for sel in _search(g, budget, stats):
            rep = _accept(sel, budget)
            if rep is not None:
                return Found(rep, stats["nodes"])
    except BudgetExceeded:
        return NotFoundWithinBudget(budget.max_nodes)
    return ExhaustedNo(stats["nodes"], budget.covers_bound(g.n))


def recognize_all(g: SimpleGraph, budget: SearchBudget, canonical: bool = True) -> Iterator[EpgRepresentation]:
    """Stream every representation within budget.

    With ``canonical`` set, representations equal up to translation are
    reported once, each translated so its bounding box touches both axes.
    Raises BudgetExceeded when the node cap is hit.
    """
    seen = set()
    for sel in _search(g, budget, {}):
        if canonical:
            key = _canonical_key(sel)
            if key in seen:
                continue
            seen.add(key)
            sel = [path_from_corners(c) for c in key]
        rep = _accept(sel, budget)
        if rep is not None:
            yield rep
