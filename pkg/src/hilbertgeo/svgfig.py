"""Deterministic SVG rendering of the canonical ideal-triangle foliation.

Draws the quadrant corner, the triangle sides x+y=1, y=1+tx, y=t(x-1)
and a geometric ladder of leaves x+y=s, clipped to a fixed viewport.
Byte output depends only on the inputs (fixed coordinate formatting,
no timestamps).
"""

import numpy as np

from .errors import InvalidParameter
from .ideal import leaf_endpoints

_SVG_HEADER = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
    'width="%d" height="%d" viewBox="0 0 %d %d">\n'
)


class _Canvas:
    """Maps chart coordinates to pixels (y axis flipped)."""

    def __init__(self, xmax, ymax, size, margin=40):
        self.size = size
        self.margin = margin
        self.scale = (size - 2 * margin) / max(xmax, ymax)
        self.ymax_px = size - margin

    def pt(self, p):
        x = self.margin + p[0] * self.scale
        y = self.ymax_px - p[1] * self.scale
        return "%.4f,%.4f" % (x, y)

    def line(self, p, q, color, width=1.0, dash=None):
        a = self.pt(p).split(",")
        b = self.pt(q).split(",")
        extra = ' stroke-dasharray="%s"' % dash if dash else ""
        return (
            '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="%s" '
            'stroke-width="%.4f"%s/>' % (a[0], a[1], b[0], b[1], color, width, extra)
        )


def _clip_segment(p, q, xmax, ymax):
    """Liang-Barsky clip of segment p->q to [0,xmax]x[0,ymax]."""
    p = np.asarray(p, float)
    d = np.asarray(q, float) - p
    t0, t1 = 0.0, 1.0
    for coord, lo, hi in ((0, 0.0, xmax), (1, 0.0, ymax)):
        if d[coord] == 0.0:
            if p[coord] < lo or p[coord] > hi:
                return None
            continue
        ta = (lo - p[coord]) / d[coord]
        tb = (hi - p[coord]) / d[coord]
        if ta > tb:
            ta, tb = tb, ta
        t0, t1 = max(t0, ta), min(t1, tb)
        if t0 > t1:
            return None
    return p + t0 * d, p + t1 * d


def foliation_svg(t, size=480, leaves=14, growth=1.3):
    """SVG text for the canonical ideal triangle with its leaf foliation."""
    if t <= 0.0:
        raise InvalidParameter("shape parameter must be positive")
    s_values = [growth**k for k in range(1, leaves + 1)]
    s_max = s_values[-1]
    a_far, b_far = leaf_endpoints(s_max, t)
    xmax = float(max(b_far[0], 1.0)) * 1.05
    ymax = float(max(a_far[1], 1.0)) * 1.05
    cv = _Canvas(xmax, ymax, size)
    parts = [_SVG_HEADER % (size, size, size, size)]
    # quadrant boundary
    parts.append(cv.line((0.0, 0.0), (xmax, 0.0), "#000000", 1.5))
    parts.append(cv.line((0.0, 0.0), (0.0, ymax), "#000000", 1.5))
    # the three sides: x+y=1, y=1+tx, y=t(x-1)
    parts.append(cv.line((0.0, 1.0), (1.0, 0.0), "#c02020", 1.5))
    for seg in (
        _clip_segment((0.0, 1.0), (xmax, 1.0 + t * xmax), xmax, ymax),
        _clip_segment((1.0, 0.0), (1.0 + xmax, t * xmax), xmax, ymax),
    ):
        if seg is not None:
            parts.append(cv.line(seg[0], seg[1], "#c02020", 1.5))
    # leaves x+y=s
    for s in s_values:
        alpha, beta = leaf_endpoints(s, t)
        seg = _clip_segment(alpha, beta, xmax, ymax)
        if seg is not None:
            parts.append(cv.line(seg[0], seg[1], "#3050c0", 0.8, dash="3,3"))
    parts.append("</svg>\n")
    return "\n".join(parts)


def emit_foliation_svg(t, path, size=480, leaves=14):
    """Write the foliation figure to path; returns the byte count."""
    text = foliation_svg(t, size=size, leaves=leaves)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return len(text.encode("utf-8"))
