"""Schematic SVG rendering of diagram JSON.

Each node's square is drawn in its own box, boxes grouped in one row per
bubble.  Corners carry their surface-vertex id so identifications can be read
off; the removed discs are drawn as circles tagged with their special line.
Curves are polylines over the cell edges they use; a tube edge is drawn
between the two discs it joins.  Layout is combinatorial, not an embedding.
"""

from __future__ import annotations

from typing import Any
from xml.sax.saxutils import escape

from .diagram import validate_diagram

SIZE = 120.0
GAP = 90.0
MARGIN = 40.0
INSET = 0.3
FAMILY_COLORS = {"alpha": "#d62728", "beta": "#2ca02c", "gamma": "#1f77b4"}

_CORNERS = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]


def _fmt(x: float) -> str:
    return f"{x:.1f}"


def _point(origin: tuple[float, float], unit: tuple[float, float], inset: float = 0.0) -> tuple[float, float]:
    ux, uy = unit
    scale = 1 - 2 * inset
    return origin[0] + SIZE * (inset + scale * ux), origin[1] + SIZE * (inset + scale * uy)


def render_svg(diagram: dict[str, Any]) -> str:
    validate_diagram(diagram)
    surf = diagram["surface"]
    squares = surf["squares"]

    rows: dict[int, list[int]] = {}
    for k, sq in enumerate(squares):
        rows.setdefault(sq["bubble"], []).append(k)
    origin: dict[int, tuple[float, float]] = {}
    for r, bubble in enumerate(sorted(rows)):
        for col, k in enumerate(rows[bubble]):
            origin[k] = (MARGIN + col * (SIZE + GAP), MARGIN + 30 + r * (SIZE + GAP))
    ch = diagram["choice"]
    title = (f"special color {ch['color']}, pairs {ch['pairs'][0]}|{ch['pairs'][1]}: "
             f"genus {diagram['genus']}, L={diagram['L']}, {diagram['status']}")
    width = max(MARGIN * 2 + max(len(v) for v in rows.values()) * (SIZE + GAP) - GAP, MARGIN * 2 + 7.5 * len(title))
    height = MARGIN * 2 + 30 + len(rows) * (SIZE + GAP) - GAP + 70

    by_node = {sq["node"]: k for k, sq in enumerate(squares)}
    # edge id -> segment endpoints in drawing coordinates
    segments: dict[int, tuple[tuple[float, float], tuple[float, float]]] = {}
    # tube edges bend below their squares instead of crossing neighbours
    controls: dict[int, tuple[float, float]] = {}
    for k, sq in enumerate(squares):
        o = origin[k]
        for t in range(4):
            c0, c1 = _CORNERS[t], _CORNERS[(t + 1) % 4]
            segments.setdefault(sq["sides"][t]["edge"], (_point(o, c0), _point(o, c1)))
            segments[sq["diagonals"][t]] = (_point(o, c0), _point(o, c0, INSET))
            segments[sq["arcs"][t]] = (_point(o, c0, INSET), _point(o, c1, INSET))
    for tube in surf["tubes"]:
        a, b = (origin[by_node[name]] for name in tube["ends"])
        for t, e in enumerate(tube["edges"]):
            p, q = _point(a, _CORNERS[t], INSET), _point(b, _CORNERS[t], INSET)
            segments[e] = (p, q)
            controls[e] = ((p[0] + q[0]) / 2, max(a[1], b[1]) + 2 * SIZE + GAP * 0.5 + 8 * t)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}" font-family="monospace" font-size="10">',
        f'<text x="{_fmt(MARGIN)}" y="{_fmt(MARGIN)}" font-size="12">{escape(title)}</text>',
    ]

    for k, sq in enumerate(squares):
        o = origin[k]
        out.append(f'<g class="square" data-node="{sq["node"]}" data-bubble="{sq["bubble"]}">')
        out.append(f'<rect x="{_fmt(o[0])}" y="{_fmt(o[1])}" width="{_fmt(SIZE)}" height="{_fmt(SIZE)}" '
                   f'fill="#fff6c8" stroke="#444"/>')
        for t in range(4):
            (x0, y0), (x1, y1) = _point(o, _CORNERS[t]), _point(o, _CORNERS[(t + 1) % 4])
            mx, my = (x0 + x1) / 2, (y0 + y1) / 2
            dx, dy = [(0, -4), (6, 3), (0, 12), (-12, 3)][t]
            out.append(f'<text x="{_fmt(mx + dx)}" y="{_fmt(my + dy)}" class="side-color">{sq["sides"][t]["color"]}</text>')
            cx, cy = _point(o, _CORNERS[t])
            out.append(f'<text x="{_fmt(cx - 10)}" y="{_fmt(cy - 3 if t < 2 else cy + 11)}" fill="#888" '
                       f'class="corner">v{sq["corners"][t]}</text>')
        out.append(f'<text x="{_fmt(o[0] + SIZE / 2 - 8)}" y="{_fmt(o[1] + SIZE + 24)}">{sq["node"]}</text>')
        out.append("</g>")

    for tube in surf["tubes"]:
        out.append(f'<g class="tube" data-line="{tube["line"]}">')
        for name in tube["ends"]:
            o = origin[by_node[name]]
            cx, cy = o[0] + SIZE / 2, o[1] + SIZE / 2
            r = SIZE * (0.5 - INSET)
            out.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" fill="#ffffff" stroke="#444" '
                       f'stroke-dasharray="2,2"/>')
            out.append(f'<text x="{_fmt(cx - 10)}" y="{_fmt(cy + 3)}">{escape(tube["line"])}</text>')
        out.append("</g>")

    failed = set(diagram["selection"]["failures"])
    for cv in diagram["curves"]:
        dashed = not cv["selected"] and cv["family"] in failed
        if not (cv["selected"] or dashed):
            continue
        shift = 2.0 * (cv["id"] % 5) - 4.0
        parts = []
        for e, direction in cv["walk"]:
            p, q = segments[e]
            if direction < 0:
                p, q = q, p
            move = f"M{_fmt(p[0] + shift)},{_fmt(p[1] + shift)}"
            end = f"{_fmt(q[0] + shift)},{_fmt(q[1] + shift)}"
            if e in controls:
                cx, cy = controls[e]
                parts.append(f"{move} Q{_fmt(cx + shift)},{_fmt(cy + shift)} {end}")
            else:
                parts.append(f"{move} L{end}")
        cls = f'curve {cv["family"]} {"selected" if cv["selected"] else "candidate"}'
        dash = ' stroke-dasharray="5,3"' if dashed else ""
        out.append(f'<path class="{cls}" data-curve="{cv["id"]}" d="{" ".join(parts)}" fill="none" '
                   f'stroke="{FAMILY_COLORS[cv["family"]]}" stroke-width="2"{dash}/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
