"""Grid geometry: points, canonical unit edges and axis-aligned lattice paths.

Coordinates are non-negative integers with ``y`` growing upwards (shape names
such as ``⌞`` assume that convention).  A path is stored by its corner
sequence; every internal corner is a bend.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence, Union

H = "H"
V = "V"


class PathError(ValueError):
    """Base class for malformed path input."""


class NonAxisAligned(PathError):
    pass


class SelfOverlap(PathError):
    pass


class ZeroLengthSegment(PathError):
    pass


class InconsistentSequence(PathError):
    pass


class AmbiguousSequence(PathError):
    pass


class GridPoint(NamedTuple):
    x: int
    y: int


class GridEdge(NamedTuple):
    """Unit edge from ``(x, y)`` to ``(x+1, y)`` (H) or ``(x, y+1)`` (V)."""

    x: int
    y: int
    dir: str

    @property
    def origin(self) -> GridPoint:
        return GridPoint(self.x, self.y)

    @property
    def head(self) -> GridPoint:
        if self.dir == H:
            return GridPoint(self.x + 1, self.y)
        return GridPoint(self.x, self.y + 1)

    @property
    def endpoints(self) -> tuple[GridPoint, GridPoint]:
        return self.origin, self.head

    def __str__(self) -> str:
        return f"{self.dir}@({self.x},{self.y})"


def edge_between(p: tuple[int, int], q: tuple[int, int]) -> GridEdge:
    """Canonical edge joining two grid points at distance one."""
    (px, py), (qx, qy) = p, q
    if py == qy and abs(px - qx) == 1:
        return GridEdge(min(px, qx), py, H)
    if px == qx and abs(py - qy) == 1:
        return GridEdge(px, min(py, qy), V)
    raise ValueError(f"points {p} and {q} are not grid neighbours")


# roles carried by a relevant edge
START = "start"
END = "end"
BEND_IN = "bend_in"
BEND_OUT = "bend_out"


class RelevantEdge(NamedTuple):
    edge: GridEdge
    roles: frozenset


@dataclass(frozen=True)
class RelevantEdgeSeq:
    entries: tuple[RelevantEdge, ...]

    @property
    def edges(self) -> tuple[GridEdge, ...]:
        return tuple(e.edge for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class LatticePath:
    """A simple axis-aligned path given by its corners.

    Build instances with :func:`path_from_corners`; the constructor trusts its
    input and is used internally once corners are known to be canonical.
    """

    corners: tuple[GridPoint, ...]

    @property
    def bends(self) -> int:
        return len(self.corners) - 2

    @property
    def segments(self) -> int:
        return len(self.corners) - 1

    @property
    def start(self) -> GridPoint:
        return self.corners[0]

    @property
    def end(self) -> GridPoint:
        return self.corners[-1]

    @property
    def bend_points(self) -> tuple[GridPoint, ...]:
        return self.corners[1:-1]

    @cached_property
    def edge_list(self) -> tuple[GridEdge, ...]:
        """Edges in traversal order."""
        out = []
        for (ax, ay), (bx, by) in zip(self.corners, self.corners[1:]):
            if ay == by:
                step = _sign(bx - ax)
                for x in range(ax, bx, step):
                    out.append(GridEdge(min(x, x + step), ay, H))
            else:
                step = _sign(by - ay)
                for y in range(ay, by, step):
                    out.append(GridEdge(ax, min(y, y + step), V))
        return tuple(out)

    @cached_property
    def edges(self) -> frozenset:
        return frozenset(self.edge_list)

    @cached_property
    def relevant(self) -> RelevantEdgeSeq:
        return _relevant_edges(self)

    @cached_property
    def relevant_set(self) -> frozenset:
        return frozenset(self.relevant.edges)

    @property
    def length(self) -> int:
        return len(self.edge_list)

    def segment_edges(self) -> list[tuple[GridEdge, ...]]:
        """Edge tuples of each straight segment, in order."""
        out = []
        i = 0
        for a, b in zip(self.corners, self.corners[1:]):
            n = abs(a[0] - b[0]) + abs(a[1] - b[1])
            out.append(self.edge_list[i:i + n])
            i += n
        return out

    def translated(self, dx: int, dy: int) -> "LatticePath":
        return LatticePath(tuple(GridPoint(x + dx, y + dy) for x, y in self.corners))

    def max_xy(self) -> tuple[int, int]:
        return max(c.x for c in self.corners), max(c.y for c in self.corners)

    def min_xy(self) -> tuple[int, int]:
        return min(c.x for c in self.corners), min(c.y for c in self.corners)

    def __str__(self) -> str:
        return " ".join(f"{x},{y}" for x, y in self.corners)


PointLike = Union[GridPoint, tuple[int, int]]


def path_from_corners(corners: Sequence[PointLike]) -> LatticePath:
    """Validate a corner list and return the canonical :class:`LatticePath`.

    Collinear runs are merged, and the orientation is flipped if needed so the
    lexicographically smaller endpoint comes first.
    """
    pts = [GridPoint(int(p[0]), int(p[1])) for p in corners]
    if len(pts) < 2:
        raise PathError("a path needs at least two corners")
    for p in pts:
        if p.x < 0 or p.y < 0:
            raise PathError(f"negative coordinate in {p}")
    for a, b in zip(pts, pts[1:]):
        if a == b:
            raise ZeroLengthSegment(f"repeated corner {tuple(a)}")
        if a.x != b.x and a.y != b.y:
            raise NonAxisAligned(f"{tuple(a)} -> {tuple(b)} is diagonal")

    merged = [pts[0]]
    for nxt in pts[1:]:
        if len(merged) >= 2:
            a, b = merged[-2], merged[-1]
            d1 = (_sign(b.x - a.x), _sign(b.y - a.y))
            d2 = (_sign(nxt.x - b.x), _sign(nxt.y - b.y))
            if d1 == d2:
                merged[-1] = nxt
                continue
            if d1 == (-d2[0], -d2[1]):
                raise SelfOverlap(f"path doubles back at {tuple(b)}")
        merged.append(nxt)

    if merged[-1] < merged[0]:
        merged.reverse()
    path = LatticePath(tuple(merged))

    seen = {path.corners[0]}
    # walk points to reject repeated vertices (and hence repeated edges)
    for (ax, ay), (bx, by) in zip(path.corners, path.corners[1:]):
        sx, sy = _sign(bx - ax), _sign(by - ay)
        x, y = ax, ay
        while (x, y) != (bx, by):
            x, y = x + sx, y + sy
            p = GridPoint(x, y)
            if p in seen:
                raise SelfOverlap(f"path revisits {tuple(p)}")
            seen.add(p)
    return path


def edges_of(path: LatticePath) -> frozenset:
    return path.edges


def _relevant_edges(path: LatticePath) -> RelevantEdgeSeq:
    segs = path.segment_edges()
    raw: list[tuple[GridEdge, str]] = []
    last = len(segs) - 1
    for i, seg in enumerate(segs):
        raw.append((seg[0], START if i == 0 else BEND_OUT))
        raw.append((seg[-1], END if i == last else BEND_IN))
    entries: list[RelevantEdge] = []
    for edge, role in raw:
        if entries and entries[-1].edge == edge:
            entries[-1] = RelevantEdge(edge, entries[-1].roles | {role})
        else:
            entries.append(RelevantEdge(edge, frozenset({role})))
    return RelevantEdgeSeq(tuple(entries))


def relevant_edges(path: LatticePath) -> RelevantEdgeSeq:
    """Extremity and bend edges in path order; shared roles collapse to one entry."""
    return path.relevant


def _collinear(e: GridEdge, f: GridEdge) -> bool:
    if e.dir != f.dir:
        return False
    return e.y == f.y if e.dir == H else e.x == f.x


def _along(e: GridEdge) -> int:
    return e.x if e.dir == H else e.y


def reconstruct_from_relevant(seq: Union[RelevantEdgeSeq, Iterable[GridEdge]]) -> LatticePath:
    """Rebuild the unique path whose relevant-edge sequence is ``seq``.

    Consecutive entries either lie on one line (the gap between them is
    filled in) or are the two edges of a bend and meet at the bend point.
    """
    edges = list(seq.edges if isinstance(seq, RelevantEdgeSeq) else seq)
    if not edges:
        raise InconsistentSequence("empty sequence")
    if len(set(edges)) != len(edges):
        raise AmbiguousSequence("an edge occurs twice in the sequence")
    if len(edges) == 1:
        a, b = edges[0].endpoints
        return path_from_corners([a, b])

    e0, e1 = edges[0], edges[1]
    if _collinear(e0, e1):
        step = _sign(_along(e1) - _along(e0))
        start, cur = e0.endpoints if step > 0 else e0.endpoints[::-1]
    else:
        shared = set(e0.endpoints) & set(e1.endpoints)
        if not shared:
            raise InconsistentSequence(f"{e0} and {e1} neither align nor form a bend")
        cur = shared.pop()
        start = e0.endpoints[0] if e0.endpoints[1] == cur else e0.endpoints[1]
    heading = (_sign(cur.x - start.x), _sign(cur.y - start.y))
    corners = [start]
    prev = e0
    for e in edges[1:]:
        if _collinear(prev, e):
            a, b = e.endpoints
            near, far = (a, b) if heading in ((1, 0), (0, 1)) else (b, a)
            gap = (near.x - cur.x) * heading[0] + (near.y - cur.y) * heading[1]
            if gap < 0 or (near.x - cur.x) * heading[1] or (near.y - cur.y) * heading[0]:
                raise InconsistentSequence(f"{e} is not ahead of the walk on its line")
            cur = far
        elif e.dir != prev.dir:
            if cur not in e.endpoints:
                raise InconsistentSequence(f"bend edge {e} does not meet the walk at {tuple(cur)}")
            corners.append(cur)
            nxt = e.endpoints[0] if e.endpoints[1] == cur else e.endpoints[1]
            heading = (nxt.x - cur.x, nxt.y - cur.y)
            cur = nxt
        else:
            raise InconsistentSequence(f"{prev} and {e} are parallel on different lines")
        prev = e
    corners.append(cur)
    try:
        path = path_from_corners(corners)
    except PathError as exc:
        raise InconsistentSequence(str(exc)) from exc
    got = list(path.relevant.edges)
    if got != edges and got[::-1] != edges:
        raise InconsistentSequence("sequence contains edges that are not relevant edges of the path")
    return path


def paths_intersect(p: LatticePath, q: LatticePath) -> tuple[bool, frozenset]:
    common = p.edges & q.edges
    return bool(common), common


def intersect_via_relevant(p: LatticePath, q: LatticePath) -> bool:
    """Edge-intersection test that only probes relevant edges of either path."""
    qe, pe = q.edges, p.edges
    return any(e in qe for e in p.relevant_set) or any(e in pe for e in q.relevant_set)
