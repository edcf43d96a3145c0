"""Text formats for graphs, representations, formulas and assignments.

Representation file::

    grid W H
    path 0: 0,0 2,0 2,3
    path 1: ...

Graph file::

    graph n m
    u v            (m edge lines)
    label u text   (optional)

Lines starting with ``#`` (and trailing ``# ...``) are comments in both.
"""

from __future__ import annotations

from .graphs import SimpleGraph
from .grid import PathError, path_from_corners
from .reduction import Assignment13, Formula13, FormulaSyntaxError, parse_formula
from .representation import EpgRepresentation, RepresentationError


class ParseError(ValueError):
    def __init__(self, msg, line=None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def _lines(text):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _int(tok, no):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", no) from None


def read_rep(text: str) -> EpgRepresentation:
    dims = None
    found: dict = {}
    for no, line in _lines(text):
        toks = line.split()
        if toks[0] == "grid":
            if dims is not None or len(toks) != 3:
                raise ParseError("expected a single 'grid W H' header", no)
            dims = (_int(toks[1], no), _int(toks[2], no))
            continue
        if toks[0] != "path":
            raise ParseError(f"unknown directive {toks[0]!r}", no)
        if dims is None:
            raise ParseError("path before grid header", no)
        head, _, body = line.partition(":")
        parts = head.split()
        if len(parts) != 2 or not _:
            raise ParseError("expected 'path <id>: x,y x,y ...'", no)
        pid = _int(parts[1], no)
        if pid in found:
            raise ParseError(f"path {pid} given twice", no)
        corners = []
        for tok in body.split():
            xy = tok.split(",")
            if len(xy) != 2:
                raise ParseError(f"bad point {tok!r}", no)
            x, y = _int(xy[0], no), _int(xy[1], no)
            if not (0 <= x < dims[0] and 0 <= y < dims[1]):
                raise ParseError(f"point {tok} outside the {dims[0]}x{dims[1]} grid", no)
            corners.append((x, y))
        try:
            found[pid] = path_from_corners(corners)
        except PathError as exc:
            raise ParseError(f"{type(exc).__name__}: {exc}", no) from None
    if dims is None:
        raise ParseError("missing 'grid W H' header")
    if sorted(found) != list(range(len(found))):
        raise ParseError("path ids must be exactly 0..n-1")
    try:
        return EpgRepresentation(dims[0], dims[1], tuple(found[i] for i in range(len(found))))
    except RepresentationError as exc:
        raise ParseError(str(exc)) from None


def write_rep(rep: EpgRepresentation) -> str:
    out = [f"grid {rep.width} {rep.height}"]
    for i, p in enumerate(rep.paths):
        out.append(f"path {i}: {p}")
    return "\n".join(out) + "\n"


def read_graph(text: str) -> SimpleGraph:
    header = None
    edges = []
    labels: dict = {}
    for no, line in _lines(text):
        toks = line.split()
        if toks[0] == "graph":
            if header is not None or len(toks) != 3:
                raise ParseError("expected a single 'graph n m' header", no)
            header = (_int(toks[1], no), _int(toks[2], no))
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative counts", no)
            continue
        if header is None:
            raise ParseError("content before 'graph n m' header", no)
        if toks[0] == "label":
            if len(toks) < 3:
                raise ParseError("expected 'label u text'", no)
            u = _int(toks[1], no)
            if not 0 <= u < header[0]:
                raise ParseError(f"vertex {u} out of range", no)
            labels[u] = line.split(None, 2)[2]
            continue
        if len(toks) != 2:
            raise ParseError(f"expected an edge 'u v', got {line!r}", no)
        u, v = _int(toks[0], no), _int(toks[1], no)
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise ParseError(f"edge ({u},{v}) out of range", no)
        if u == v:
            raise ParseError(f"self-loop at {u}", no)
        edges.append((u, v))
    if header is None:
        raise ParseError("missing 'graph n m' header")
    n, m = header
    g = SimpleGraph.from_edges(n, edges)
    if g.m != m or len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)} ({g.m} distinct)")
    if labels:
        g = SimpleGraph(g.n, g.adj, tuple(labels.get(v, str(v)) for v in range(n)))
    return g


def write_graph(g: SimpleGraph) -> str:
    out = [f"graph {g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges()]
    if g.labels:
        out += [f"label {v} {g.labels[v]}" for v in range(g.n)]
    return "\n".join(out) + "\n"


def read_formula(text: str) -> Formula13:
    try:
        return parse_formula(text)
    except FormulaSyntaxError as exc:
        raise ParseError(str(exc)) from None


def write_formula(f: Formula13) -> str:
    return f.to_text()


def read_assignment(text: str) -> Assignment13:
    lines = [line for _, line in _lines(text)]
    try:
        return Assignment13.parse(" ".join(lines))
    except FormulaSyntaxError as exc:
        raise ParseError(str(exc)) from None


def write_assignment(a: Assignment13) -> str:
    return a.to_text() + "\n"
