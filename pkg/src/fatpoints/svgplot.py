"""Deterministic SVG rendering of point and line configurations.

The affine chart z != 0 is drawn; points at infinity are marked on a
boundary band in their direction.  Output bytes depend only on the input,
so identical configurations render to identical files.
"""

from __future__ import annotations

from fractions import Fraction

CANVAS = 640
MARGIN = 60
POINT_RADIUS = 5


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _affine(P):
    x, y, z = P.coords
    if z == P.field.zero:
        return None
    if P.field.characteristic == 0:
        return float(Fraction(x)), float(Fraction(y))
    return float(int(x)), float(int(y))


def _line_affine(coeffs, field):
    a, b, c = coeffs
    if field.characteristic == 0:
        return float(Fraction(a)), float(Fraction(b)), float(Fraction(c))
    return float(int(a)), float(int(b)), float(int(c))


def _clip_line(a, b, c, lo_x, hi_x, lo_y, hi_y):
    """Endpoints of {ax + by + c = 0} clipped to a rectangle, or None."""
    pts = []
    if abs(b) > 1e-12:
        for x in (lo_x, hi_x):
            y = (-c - a * x) / b
            if lo_y - 1e-9 <= y <= hi_y + 1e-9:
                pts.append((x, y))
    if abs(a) > 1e-12:
        for y in (lo_y, hi_y):
            x = (-c - b * y) / a
            if lo_x - 1e-9 <= x <= hi_x + 1e-9:
                pts.append((x, y))
    uniq = []
    for p in pts:
        if all(abs(p[0] - q[0]) + abs(p[1] - q[1]) > 1e-9 for q in uniq):
            uniq.append(p)
    if len(uniq) < 2:
        return None
    uniq.sort()
    return uniq[0], uniq[-1]


def render_svg(points=(), lines=(), labels=None) -> str:
    """An SVG document for the configuration; empty input gives an empty canvas."""
    points = tuple(points)
    lines = tuple(lines)
    if labels is None:
        labels = [f"P{i + 1}" for i in range(len(points))]
    finite = []
    infinite = []
    for P in points:
        aff = _affine(P)
        if aff is None:
            infinite.append(P)
        else:
            finite.append(aff)
    if finite:
        xs = [p[0] for p in finite]
        ys = [p[1] for p in finite]
        lo_x, hi_x = min(xs), max(xs)
        lo_y, hi_y = min(ys), max(ys)
    else:
        lo_x = lo_y = -1.0
        hi_x = hi_y = 1.0
    pad_x = max((hi_x - lo_x) * 0.15, 1.0)
    pad_y = max((hi_y - lo_y) * 0.15, 1.0)
    lo_x, hi_x = lo_x - pad_x, hi_x + pad_x
    lo_y, hi_y = lo_y - pad_y, hi_y + pad_y
    span = CANVAS - 2 * MARGIN
    scale = span / max(hi_x - lo_x, hi_y - lo_y)

    def to_px(x, y):
        # y axis points up in the chart, down in SVG
        return (
            MARGIN + (x - lo_x) * scale,
            CANVAS - MARGIN - (y - lo_y) * scale,
        )

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}">',
        f'<rect x="0" y="0" width="{CANVAS}" height="{CANVAS}" fill="white"/>',
    ]
    for L in lines:
        a, b, c = _line_affine(L.coeffs, L.field)
        seg = _clip_line(a, b, c, lo_x, hi_x, lo_y, hi_y)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = seg
        px1, py1 = to_px(x1, y1)
        px2, py2 = to_px(x2, y2)
        parts.append(
            f'<line x1="{_fmt(px1)}" y1="{_fmt(py1)}" x2="{_fmt(px2)}" '
            f'y2="{_fmt(py2)}" stroke="steelblue" stroke-width="1.5"/>'
        )
    idx = 0
    for P in points:
        aff = _affine(P)
        if aff is None:
            idx += 1
            continue
        px, py = to_px(*aff)
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{POINT_RADIUS}" fill="black"/>'
        )
        parts.append(
            f'<text x="{_fmt(px + 8)}" y="{_fmt(py - 8)}" '
            f'font-family="monospace" font-size="14">{labels[idx]}</text>'
        )
        idx += 1
    # points at infinity sit on a dashed band along the top edge
    for j, P in enumerate(infinite):
        px = MARGIN + (j + 1) * span / (len(infinite) + 1)
        py = MARGIN / 2
        label = labels[points.index(P)]
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{POINT_RADIUS}" '
            f'fill="none" stroke="black" stroke-dasharray="2,2"/>'
        )
        parts.append(
            f'<text x="{_fmt(px + 8)}" y="{_fmt(py - 8)}" '
            f'font-family="monospace" font-size="14">{label} (inf)</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
