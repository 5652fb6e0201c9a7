"""ASCII and SVG pictures of a window of a cylindric diagram.

Rows ``1..m`` of the fundamental domain are drawn with each cell showing its
content residue.  Bottom-set cells are marked: ``^`` for maximal, ``_`` for
minimal and ``*`` for the remaining ones.
"""
from __future__ import annotations

from typing import Iterable

from .diagrams import CylindricDiagram, content, window
from .lattice import CylCell

MARK_MAX, MARK_MIN, MARK_MID = "^", "_", "*"
FILL = {MARK_MAX: "#f4b942", MARK_MIN: "#7fb3d5", MARK_MID: "#f7e08a", " ": "#ffffff"}


def _mark(d: CylindricDiagram, x: CylCell) -> str:
    b = d.bottom
    if x in b.maximal:
        return MARK_MAX
    if x in b.minimal:
        return MARK_MIN
    if x in b.cells:
        return MARK_MID
    return " "


def _columns(d: CylindricDiagram, cells: Iterable[CylCell]) -> range:
    cells = list(cells)
    return range(min(x.b for x in cells), max(d.lam) + 1)


def render_ascii(d: CylindricDiagram, depth: int = 0, highlight: Iterable[CylCell] = ()) -> str:
    """Fixed-width grid; highlighted cells are wrapped in brackets."""
    cells = set(window(d, depth))
    hl = set(highlight)
    cols = _columns(d, cells)
    width = max(3, len(str(d.kappa - 1)) + 2)
    lines = [f"{d!r}  depth {depth}  contents mod {d.kappa}"]
    lines.append("     " + "".join(f"{b:>{width + 1}}" for b in cols))
    for a in range(1, d.m + 1):
        row = []
        for b in cols:
            x = d.cell(a, b)
            if x not in cells:
                row.append(" " * width)
                continue
            body = f"{_mark(d, x)}{content(d, x)}"
            if x in hl:
                body = f"[{body}]"
            row.append(f"{body:>{width}}")
        lines.append(f"{a:>4} |" + "|".join(row) + "|")
    lines.append(f"  {MARK_MAX} maximal bottom   {MARK_MIN} minimal bottom   {MARK_MID} other bottom")
    return "\n".join(lines) + "\n"


def render_svg(d: CylindricDiagram, depth: int = 0, size: int = 32) -> str:
    """Deterministic SVG of the same grid; no timestamps or random ids."""
    cells = set(window(d, depth))
    cols = _columns(d, cells)
    w = (len(cols) + 1) * size
    h = (d.m + 1) * size
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f"<title>{d!r} depth {depth}</title>",
    ]
    for j, b in enumerate(cols):
        out.append(f'<text x="{(j + 1.5) * size:.1f}" y="{0.65 * size:.1f}" font-size="{size // 3}" '
                   f'text-anchor="middle">{b}</text>')
    for a in range(1, d.m + 1):
        y = a * size
        out.append(f'<text x="{0.5 * size:.1f}" y="{y + 0.65 * size:.1f}" font-size="{size // 3}" '
                   f'text-anchor="middle">{a}</text>')
        for j, b in enumerate(cols):
            x = d.cell(a, b)
            if x not in cells:
                continue
            px = (j + 1) * size
            fill = FILL[_mark(d, x)]
            out.append(f'<rect x="{px}" y="{y}" width="{size}" height="{size}" fill="{fill}" stroke="#000"/>')
            out.append(f'<text x="{px + size / 2:.1f}" y="{y + 0.65 * size:.1f}" font-size="{size // 2}" '
                       f'text-anchor="middle">{content(d, x)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
