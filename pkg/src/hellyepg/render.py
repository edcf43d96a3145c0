"""Static SVG and ASCII drawings of representations."""

from __future__ import annotations

from .grid import GridEdge, H
from .representation import EpgRepresentation

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
           "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f")
OFFSET = 0.06  # fraction of a cell each path is shifted by, per index step


def render_svg(rep: EpgRepresentation, cell: int = 40, labels=None) -> str:
    """Grid lines plus one polyline per path.

    Path ``i`` is shifted diagonally by a multiple of 6% of the cell size
    (cycling through a few offsets) so coincident segments stay visible.
    """
    margin = cell
    w = max(rep.width - 1, 0) * cell + 2 * margin
    h = max(rep.height - 1, 0) * cell + 2 * margin

    def px(x, y, off=0.0):
        return margin + (x + off) * cell, h - margin - (y + off) * cell

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
           f'<rect width="{w}" height="{h}" fill="white"/>',
           '<g stroke="#dddddd" stroke-width="1">']
    for x in range(rep.width):
        (x0, y0), (x1, y1) = px(x, 0), px(x, rep.height - 1)
        out.append(f'<line x1="{x0:.1f}" y1="{y0:.1f}" x2="{x1:.1f}" y2="{y1:.1f}"/>')
    for y in range(rep.height):
        (x0, y0), (x1, y1) = px(0, y), px(rep.width - 1, y)
        out.append(f'<line x1="{x0:.1f}" y1="{y0:.1f}" x2="{x1:.1f}" y2="{y1:.1f}"/>')
    out.append("</g>")
    for i, p in enumerate(rep.paths):
        off = OFFSET * ((i % 5) - 2)
        pts = " ".join("%.1f,%.1f" % px(x, y, off) for x, y in p.corners)
        color = PALETTE[i % len(PALETTE)]
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="2.5" '
                   f'stroke-linecap="round" stroke-linejoin="round"/>')
        tx, ty = px(*p.corners[0], off)
        name = labels[i] if labels else str(i)
        out.append(f'<text x="{tx + 3:.1f}" y="{ty - 3:.1f}" font-size="{cell // 4}" '
                   f'fill="{color}" font-family="monospace">{_esc(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_ascii(rep: EpgRepresentation) -> str:
    """Character picture: '+' grid points, '-'/'|' used edges, digits where one path owns an edge."""
    if rep.width == 0 or rep.height == 0:
        return ""
    cover = rep.edge_index()
    rows = []
    for y in range(rep.height - 1, -1, -1):
        line = []
        for x in range(rep.width):
            line.append("+")
            if x < rep.width - 1:
                line.append(_mark(cover, (x, y, H), "-"))
        rows.append("".join(line).rstrip())
        if y > 0:
            line = []
            for x in range(rep.width):
                line.append(_mark(cover, (x, y - 1, "V"), "|"))
                line.append(" ")
            rows.append("".join(line).rstrip())
    return "\n".join(rows) + "\n"


def _mark(cover, key, sym):
    mask = cover.get(GridEdge(*key), 0)
    if not mask:
        return " "
    if mask & (mask - 1):
        return "*"
    i = mask.bit_length() - 1
    return str(i) if i < 10 else sym
