"""Braid diagrams as standalone SVG.

Strands run top to bottom, one row per letter.  For sigma_i the strand at
position i+1 passes over the one at position i; sigma_i^-1 is the mirror.
The under-strand is drawn in two pieces, leaving a gap where it passes
beneath.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .braid import BraidWord

DX = 40
DY = 40
MARGIN = 20
GAP = 0.22  # fraction of the under-strand hidden on each side of the midpoint


def _x(pos: int) -> float:
    return MARGIN + (pos - 1) * DX


def _fmt(v: float) -> str:
    return f"{v:.1f}".rstrip("0").rstrip(".")


def _line(x1, y1, x2, y2, cls: str) -> str:
    return (f'<line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')


def render_braid(word: BraidWord, title: str | None = None) -> str:
    m = word.strands
    rows = max(len(word), 1)
    width = 2 * MARGIN + (m - 1) * DX
    height = 2 * MARGIN + rows * DY
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" data-strands="{m}" data-crossings="{len(word)}">',
        "<style>line{stroke:#000;stroke-width:2;stroke-linecap:round}</style>",
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    if not word.letters:
        for pos in range(1, m + 1):
            out.append(_line(_x(pos), MARGIN, _x(pos), height - MARGIN, "strand"))
    for row, letter in enumerate(word.letters):
        y0 = MARGIN + row * DY
        y1 = y0 + DY
        i = abs(letter)
        out.append(f'<g class="crossing" data-index="{row}" data-letter="{letter}">')
        # positive: i+1 -> i is over; negative: i -> i+1 is over
        if letter > 0:
            over = (_x(i + 1), _x(i))
            under = (_x(i), _x(i + 1))
        else:
            over = (_x(i), _x(i + 1))
            under = (_x(i + 1), _x(i))
        out.append(_line(over[0], y0, over[1], y1, "over"))
        ux0, ux1 = under
        mx, my = (ux0 + ux1) / 2, (y0 + y1) / 2
        f = 0.5 - GAP
        out.append(_line(ux0, y0, ux0 + (mx - ux0) * 2 * f, y0 + (my - y0) * 2 * f, "under"))
        out.append(_line(ux1 - (ux1 - mx) * 2 * f, y1 - (y1 - my) * 2 * f, ux1, y1, "under"))
        out.append("</g>")
        for pos in range(1, m + 1):
            if pos not in (i, i + 1):
                out.append(_line(_x(pos), y0, _x(pos), y1, "strand"))
    out.append("</svg>")
    return "\n".join(out) + "\n"
