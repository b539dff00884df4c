"""SVG drawing of a unit-perimeter point set inside the unit disk."""
from __future__ import annotations

import math
from pathlib import Path

from .conic_maps import EllipseRec, UnitPerimeterSet

SIZE = 600
ELLIPSE_SEGMENTS = 180

HEADER = """<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="-1.1 -1.1 2.2 2.2">
<g transform="scale(1,-1)" fill="none" stroke-width="0.004">
"""
FOOTER = "</g>\n</svg>\n"


def _f(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def ellipse_path(e: EllipseRec, segments: int = ELLIPSE_SEGMENTS) -> str:
    qx, qy = e.focus2
    a = e.axis_sum / 2
    c = math.hypot(qx, qy) / 2
    b = math.sqrt(max(a * a - c * c, 0.0))
    cx, cy = qx / 2, qy / 2
    angle = math.atan2(qy, qx)
    ca, sa = math.cos(angle), math.sin(angle)
    coords = []
    for i in range(segments):
        t = 2 * math.pi * i / segments
        x, y = a * math.cos(t), b * math.sin(t)
        coords.append(f"{_f(cx + ca * x - sa * y)},{_f(cy + sa * x + ca * y)}")
    return "M" + " L".join(coords) + " Z"


def render_svg_text(ups: UnitPerimeterSet) -> str:
    parts = [HEADER.format(size=SIZE)]
    parts.append('<circle cx="0" cy="0" r="1" stroke="#000000"/>\n')
    for e in ups.ellipses:
        parts.append(f'<path d="{ellipse_path(e)}" stroke="#4a7ab5"/>\n')
    mark = 0.012
    for p, tag in zip(ups.points, ups.tags):
        x, y = _f(p.x), _f(p.y)
        if tag == "mapped-point":
            parts.append(f'<rect x="{_f(p.x - mark)}" y="{_f(p.y - mark)}" width="{_f(2 * mark)}" '
                         f'height="{_f(2 * mark)}" fill="#c0392b"/>\n')
        elif tag == "focus2":
            parts.append(f'<circle cx="{x}" cy="{y}" r="{_f(mark)}" fill="#27ae60"/>\n')
        else:
            parts.append(f'<circle cx="{x}" cy="{y}" r="{_f(1.5 * mark)}" fill="#000000"/>\n')
    parts.append(FOOTER)
    return "".join(parts)


def render_svg(ups: UnitPerimeterSet, path) -> None:
    """Unit circle, ellipses, mapped points as squares, foci as dots."""
    path = Path(path)
    try:
        path.write_text(render_svg_text(ups), encoding="utf-8")
    except OSError as exc:
        raise OSError(f"could not write SVG to {path}: {exc}") from exc
