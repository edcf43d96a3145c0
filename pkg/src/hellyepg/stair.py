"""Stair construction: a Helly EPG representation of any graph.

Maximal clique number ``i`` (1-based position in the chosen order) owns one
grid edge on the diagonal, with ``j = i - 1``:

* odd ``i``: the horizontal edge (j, j)-(j+1, j)
* even ``i``: the vertical edge (j, j)-(j, j+1)

Each vertex path visits the edges of its cliques in order.  Leaving an odd
clique it runs right along its row, leaving an even clique it runs up its
column; it then turns toward the next diagonal point.  Paths are monotone
staircases, and a horizontal edge in row r (vertical edge in column r) only
appears on paths of vertices of clique r + 1, so non-adjacent vertices never
meet.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import SimpleGraph, maximal_cliques
from .grid import GridPoint, path_from_corners
from .representation import EpgRepresentation


@dataclass(frozen=True)
class StairLayout:
    rep: EpgRepresentation
    cliques: tuple  # cliques in placement order


def predicted_bends(positions: list[int]) -> int:
    """Bends of a path visiting the given 1-based clique positions in order."""
    return sum(1 if (a - b) % 2 else 2 for a, b in zip(positions, positions[1:]))


def _greedy_order(cliques) -> list:
    """Place cliques so consecutive cliques of a vertex tend to alternate parity."""
    last_parity: dict = {}
    left = list(cliques)
    out = []
    for i in range(1, len(cliques) + 1):
        par = i % 2
        best = min(left, key=lambda c: (sum(1 for v in c if last_parity.get(v) == par), c))
        left.remove(best)
        out.append(best)
        for v in best:
            last_parity[v] = par
    return out


def _cost(g: SimpleGraph, order) -> tuple[int, int]:
    pos = {v: [] for v in range(g.n)}
    for i, c in enumerate(order, start=1):
        for v in c:
            pos[v].append(i)
    bends = [predicted_bends(p) for p in pos.values()]
    return max(bends, default=0), sum(bends)


def clique_order(g: SimpleGraph, order: str = "best") -> tuple:
    cliques = list(maximal_cliques(g))
    if order == "lex":
        return tuple(cliques)
    greedy = _greedy_order(cliques)
    if order == "greedy":
        return tuple(greedy)
    if order != "best":
        raise ValueError(f"unknown clique order {order!r}")
    return tuple(min((cliques, greedy), key=lambda o: _cost(g, o)))


def _stair_path(positions: list[int]):
    j0 = positions[0] - 1
    corners = [GridPoint(j0, j0)]

    def turn(pt):
        if corners[-1] != pt:
            corners.append(pt)

    for a, b in zip(positions, positions[1:]):
        ja, jb = a - 1, b - 1
        if a % 2:  # right along row ja, then up column jb
            turn(GridPoint(jb, ja))
        else:  # up column ja, then right along row jb
            turn(GridPoint(ja, jb))
        turn(GridPoint(jb, jb))
    jl = positions[-1] - 1
    tail = GridPoint(jl + 1, jl) if positions[-1] % 2 else GridPoint(jl, jl + 1)
    corners.append(tail)
    return path_from_corners(corners)


def stair_layout(g: SimpleGraph, order: str = "best") -> StairLayout:
    if g.n < 1:
        raise ValueError("the stair construction needs at least one vertex")
    cliques = clique_order(g, order)
    pos = {v: [] for v in range(g.n)}
    for i, c in enumerate(cliques, start=1):
        for v in c:
            pos[v].append(i)
    paths = tuple(_stair_path(pos[v]) for v in range(g.n))
    mu = len(cliques)
    return StairLayout(EpgRepresentation(mu + 1, mu + 1, paths), cliques)


def stair_representation(g: SimpleGraph, order: str = "best") -> EpgRepresentation:
    return stair_layout(g, order).rep
