"""Minimal SVG drawing of tilt walls (presentational only)."""
from math import sqrt

from .tilt import SEMICIRCLE, VERTICAL


def walls_svg(walls, width=600, height=300):
    xs, top = [], 1.0
    for w in walls:
        if w.kind == SEMICIRCLE:
            r = sqrt(w.radius_sq)
            xs += [float(w.center) - r, float(w.center) + r]
            top = max(top, r)
        elif w.kind == VERTICAL:
            xs.append(float(w.beta))
    lo, hi = (min(xs), max(xs)) if xs else (-1.0, 1.0)
    pad = 0.1 * (hi - lo or 1.0)
    lo, hi = lo - pad, hi + pad
    sx = width / (hi - lo)
    sy = height / (1.1 * top)
    X = lambda b: (b - lo) * sx
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
             f'<line x1="0" y1="{height}" x2="{width}" y2="{height}" stroke="black"/>']
    for w in walls:
        if w.kind == SEMICIRCLE:
            r = sqrt(w.radius_sq)
            parts.append(f'<path d="M {X(float(w.center) - r):.2f} {height} '
                         f'A {r * sx:.2f} {r * sy:.2f} 0 0 1 {X(float(w.center) + r):.2f} {height}" '
                         'fill="none" stroke="steelblue"/>')
        elif w.kind == VERTICAL:
            parts.append(f'<line x1="{X(float(w.beta)):.2f}" y1="0" x2="{X(float(w.beta)):.2f}" '
                         f'y2="{height}" stroke="firebrick"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
