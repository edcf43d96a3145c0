"""Simple undirected graphs, maximal cliques, degeneracy, bend bounds and named generators."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

import networkx as nx


class BadParameter(ValueError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adj: tuple  # tuple of frozensets, adj[v] = neighbours of v
    labels: Optional[tuple] = field(default=None, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Optional[Sequence[str]] = None):
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise BadParameter(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise BadParameter(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise BadParameter("label count does not match vertex count")
        return cls(n, tuple(frozenset(s) for s in nbrs), labels)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def index(self, label: str) -> int:
        if not self.labels:
            raise KeyError(label)
        return self.labels.index(label)

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        es = [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        labels = tuple(self.label(v) for v in vs) if self.labels else None
        return SimpleGraph.from_edges(len(vs), es, labels)

    def same_edges(self, other: "SimpleGraph") -> bool:
        return self.n == other.n and self.adj == other.adj

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


CliqueList = tuple  # tuple of sorted vertex tuples


def maximal_cliques(g: SimpleGraph) -> CliqueList:
    """All maximal cliques as sorted tuples, in lexicographic order.

    Isolated vertices are singleton cliques.
    """
    found = [tuple(sorted(c)) for c in nx.find_cliques(g.to_networkx())]
    return tuple(sorted(found))


def degeneracy(g: SimpleGraph) -> tuple[int, list[int]]:
    """Repeatedly remove a minimum-degree vertex (smallest id on ties).

    Returns the largest degree seen at removal time and the removal order.
    """
    deg = [len(a) for a in g.adj]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    gone = [False] * g.n
    order, d_max = [], 0
    while heap:
        d, v = heapq.heappop(heap)
        if gone[v] or d != deg[v]:
            continue
        gone[v] = True
        order.append(v)
        d_max = max(d_max, d)
        for u in g.adj[v]:
            if not gone[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return d_max, order


@dataclass(frozen=True)
class BendBounds:
    lower: Fraction  # max(0, mu/2n - 1)
    upper: int  # mu - 1
    raw_lower: Fraction
    mu: int
    n: int


def helly_bend_bounds(g: SimpleGraph) -> BendBounds:
    if g.n < 1:
        raise BadParameter("bounds need at least one vertex")
    mu = len(maximal_cliques(g))
    raw = Fraction(mu, 2 * g.n) - 1
    return BendBounds(max(Fraction(0), raw), mu - 1, raw, mu, g.n)


PASSES_EULER = "PassesEulerBound"
FAILS_EULER = "FailsEulerBound"


def _euler_ok(nv: int, ne: int) -> bool:
    # graphs on fewer than three vertices are always planar
    return nv < 3 or ne <= 3 * nv - 6


def apex_removal_check(g: SimpleGraph, removed: Iterable[int]) -> str:
    """Necessary planarity condition |E| <= 3|V| - 6 on g minus ``removed``.

    Checked on the residual graph and on each connected component.  A pass
    does not certify planarity.
    """
    rem = set(removed)
    for v in rem:
        if not 0 <= v < g.n:
            raise BadParameter(f"vertex {v} not in graph")
    keep = [v for v in range(g.n) if v not in rem]
    h = g.to_networkx().subgraph(keep)
    if not _euler_ok(h.number_of_nodes(), h.number_of_edges()):
        return FAILS_EULER
    for comp in nx.connected_components(h):
        sub = h.subgraph(comp)
        if not _euler_ok(sub.number_of_nodes(), sub.number_of_edges()):
            return FAILS_EULER
    return PASSES_EULER


# ---------------------------------------------------------------- generators

def triangle() -> SimpleGraph:
    return complete(3)


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise BadParameter("cycle needs n >= 3")
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> SimpleGraph:
    if n < 1:
        raise BadParameter("complete graph needs n >= 1")
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def k24() -> SimpleGraph:
    """K_{2,4}: small side {0, 1}, large side {2, 3, 4, 5}."""
    return SimpleGraph.from_edges(6, [(s, t) for s in (0, 1) for t in range(2, 6)],
                                  ["s1", "s2", "t1", "t2", "t3", "t4"])


def cocktail_party(r: int) -> SimpleGraph:
    """K_{2r} minus the perfect matching {2i, 2i+1}."""
    if r < 2:
        raise BadParameter("cocktail party graph needs r >= 2")
    n = 2 * r
    return SimpleGraph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if u // 2 != v // 2])


def octahedron() -> SimpleGraph:
    return cocktail_party(3)


def bat_graph() -> SimpleGraph:
    """A 4-cycle with a K_{2,4} glued onto each cycle vertex.

    Each copy identifies one large-side vertex with a cycle vertex, giving
    4 + 4 * 5 = 24 vertices.
    """
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    labels = ["c0", "c1", "c2", "c3"]
    nxt = 4
    for c in range(4):
        s1, s2, t1, t2, t3 = range(nxt, nxt + 5)
        nxt += 5
        labels += [f"k{c}.s1", f"k{c}.s2", f"k{c}.t1", f"k{c}.t2", f"k{c}.t3"]
        for s in (s1, s2):
            for t in (c, t1, t2, t3):
                edges.append((s, t))
    return SimpleGraph.from_edges(nxt, edges, labels)


GADGET_LABELS = ("a", "b", "c", "d", "e", "f", "g", "h", "bc", "cg", "fg", "bf")
GADGET_TRIANGLES = (("a", "b", "c"), ("bc", "b", "c"), ("e", "c", "g"), ("cg", "c", "g"),
                    ("h", "g", "f"), ("fg", "g", "f"), ("d", "b", "f"), ("bf", "b", "f"))
GADGET_CYCLE = (("b", "c"), ("c", "g"), ("g", "f"), ("f", "b"))


def gadget_edges() -> list[tuple[str, str]]:
    es = set(frozenset(e) for e in GADGET_CYCLE)
    for x, y, z in GADGET_TRIANGLES:
        es.update({frozenset((x, y)), frozenset((x, z))})
    return sorted(tuple(sorted(e, key=GADGET_LABELS.index)) for e in es)


def gadget_h() -> SimpleGraph:
    idx = {lab: i for i, lab in enumerate(GADGET_LABELS)}
    return SimpleGraph.from_edges(12, [(idx[u], idx[v]) for u, v in gadget_edges()], GADGET_LABELS)


def three_sun() -> SimpleGraph:
    # inner triangle x, y, z; each outer vertex sees one side of it
    labels = ["x", "y", "z", "u", "w", "t"]
    edges = [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)]
    return SimpleGraph.from_edges(6, edges, labels)


def generate(name: str, *args: int) -> SimpleGraph:
    table = {
        "triangle": triangle, "cycle": cycle, "complete": complete, "k24": k24,
        "octahedron": octahedron, "cocktail_party": cocktail_party, "bat_graph": bat_graph,
        "gadget_h": gadget_h, "three_sun": three_sun,
    }
    key = name.replace("-", "_")
    if key not in table:
        raise BadParameter(f"unknown generator {name!r}")
    try:
        return table[key](*args)
    except TypeError as exc:
        raise BadParameter(f"bad arguments for {name}: {args}") from exc


GENERATOR_SAMPLES = (
    ("triangle",), ("cycle", 4), ("cycle", 5), ("cycle", 6), ("complete", 4), ("complete", 5),
    ("k24",), ("octahedron",), ("cocktail_party", 2), ("cocktail_party", 4), ("bat_graph",),
    ("gadget_h",), ("three_sun",),
)


def generator_samples() -> list[tuple[str, SimpleGraph]]:
    out = []
    for entry in GENERATOR_SAMPLES:
        name = entry[0] if len(entry) == 1 else f"{entry[0]}({', '.join(map(str, entry[1:]))})"
        out.append((name, generate(*entry)))
    return out


def random_graph(n: int, p: float, rng) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])
