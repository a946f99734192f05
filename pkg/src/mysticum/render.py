"""SVG pictures of configurations and ranges.

Pictures are for looking at only: exact coordinates are turned into floats
here and nowhere else. Heights are coloured green (even) and blue (odd);
fixed-part elements are grey.
"""

from __future__ import annotations

import fnmatch
from xml.sax.saxutils import escape

from .projective import Line, Point

__all__ = ["Drawable", "collect_elements", "select", "render_svg"]

EVEN = "#2a9d3f"
ODD = "#1f5fbf"
FIXED = "#6b6b6b"
CONIC = "#c0392b"

SVG_HEADER = """<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
 "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="%(w)d" height="%(h)d" viewBox="0 0 %(w)d %(h)d" version="1.1" xmlns="http://www.w3.org/2000/svg">
<rect x="0" y="0" width="%(w)d" height="%(h)d" style="fill:#ffffff"/>
"""
SVG_FOOTER = "</svg>\n"


class Drawable:
    __slots__ = ("name", "element", "height")

    def __init__(self, name, element, height=None):
        self.name = name
        self.element = element
        self.height = height

    @property
    def colour(self):
        if self.height is None:
            return FIXED
        return ODD if self.height % 2 else EVEN

    def __repr__(self):
        return f"Drawable({self.name!r}, height={self.height})"


def collect_elements(m, heights=(0,)):
    """Every nameable element: fixed part, plus layers at the given heights."""
    out = []
    b = m.base
    for table in (b.steiner, b.cayley, b.plucker, b.salmon, b.meeting):
        out += [Drawable(str(k), v) for k, v in table.items()]
    if m.height >= 2:
        out += [Drawable(str(k), v) for k, v in m.ladd_lines().items()]
    if m.height >= 1:
        out += [Drawable(str(k), v) for k, v in m.veronese_nodes().items()]
    for i in heights:
        layer = m.layer(i)
        suffix = "" if i == 0 else f"({i})"
        out += [Drawable(f"{k}{suffix}", v, i) for k, v in layer.pascals.items()]
        out += [Drawable(f"{k}{suffix}", v, i) for k, v in layer.kirkmans.items()]
    return out


def select(drawables, patterns):
    """Keep drawables whose name matches any of the comma-separated globs."""
    pats = [p.strip() for p in patterns.split(",") if p.strip()]
    return [d for d in drawables if any(fnmatch.fnmatchcase(d.name, p) for p in pats)]


def _float_xy(p):
    x, y, z = p.coords
    if z == 0:
        return None
    return x / z, y / z


def _viewport(points):
    xs = sorted(p[0] for p in points)
    ys = sorted(p[1] for p in points)
    # trim the outer tenth on each side so far-flung nodes do not flatten the rest
    k = len(xs) // 10 if len(xs) >= 10 else 0
    x0, x1 = xs[k], xs[-1 - k]
    y0, y1 = ys[k], ys[-1 - k]
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = 0.1 * span
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    half = span / 2 + pad
    return cx - half, cy - half, cx + half, cy + half


def _unit(coeffs):
    big = max(abs(v) for v in coeffs)
    return tuple(v / big for v in coeffs)


def _clip_line(coeffs, box):
    a, b, c = _unit(coeffs)
    x0, y0, x1, y1 = box
    hits = []
    if b != 0:
        for x in (x0, x1):
            y = -(a * x + c) / b
            if y0 <= y <= y1:
                hits.append((x, y))
    if a != 0:
        for y in (y0, y1):
            x = -(b * y + c) / a
            if x0 <= x <= x1:
                hits.append((x, y))
    if len(hits) < 2:
        return None
    hits.sort()
    return hits[0], hits[-1]


def _reach(box, coeffs):
    # grow the square box until it holds the foot of the perpendicular from its centre
    a, b, c = _unit(coeffs)
    x0, y0, x1, y1 = box
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    n2 = a * a + b * b
    if n2 == 0:
        return box
    t = (a * cx + b * cy + c) / n2
    fx, fy = cx - a * t, cy - b * t
    half = max(abs(fx - cx), abs(fy - cy)) * 1.1 + (x1 - x0) / 20
    half = max(half, (x1 - x0) / 2)
    return cx - half, cy - half, cx + half, cy + half


def render_svg(drawables, sextuple=None, size=(800, 800), show_labels=True,
               carrier=None, title=None):
    """SVG 1.1 text showing ``drawables`` (and the conic with its six points).

    ``carrier`` is an optional extra Drawable drawn thicker, e.g. the Cayley
    line under a Kirkman range.
    """
    if not drawables:
        raise ValueError("nothing selected to render")
    w, h = size
    anchor = []
    for d in drawables:
        if isinstance(d.element, Point):
            xy = _float_xy(d.element)
            if xy is not None:
                anchor.append(xy)
    if sextuple is not None:
        anchor += [xy for xy in map(_float_xy, sextuple.points) if xy is not None]
    if len(anchor) < 2:
        anchor += [(-1.0, -1.0), (1.0, 1.0)]
    box = _viewport(anchor)
    for d in drawables:
        if isinstance(d.element, Line) and _clip_line(d.element.coords, box) is None:
            box = _reach(box, d.element.coords)
    x0, y0, x1, y1 = box
    sx = w / (x1 - x0)
    sy = h / (y1 - y0)

    def tr(x, y):
        return (x - x0) * sx, h - (y - y0) * sy

    parts = [SVG_HEADER % {"w": w, "h": h}]
    if title:
        parts.append(f'<title>{escape(title)}</title>\n')
    if sextuple is not None:
        # the conic x = y^2 in the chart z = 1
        pts = []
        n = 200
        for k in range(n + 1):
            y = y0 + (y1 - y0) * k / n
            x = y * y
            if x0 - (x1 - x0) <= x <= x1 + (x1 - x0):
                pts.append("%.3f,%.3f" % tr(x, y))
        if pts:
            parts.append(
                '<polyline points="%s" style="fill:none;stroke:%s;stroke-width:1.5"/>\n'
                % (" ".join(pts), CONIC)
            )
        for letter, p in zip("abcdef", sextuple.points):
            xy = _float_xy(p)
            if xy is None:
                continue
            px, py = tr(*xy)
            parts.append('<circle cx="%.3f" cy="%.3f" r="4" style="fill:%s"/>\n' % (px, py, CONIC))
            parts.append('<text x="%.3f" y="%.3f" style="font-family:sans-serif;font-size:12">%s</text>\n'
                         % (px + 5, py - 5, letter))
    items = list(drawables)
    if carrier is not None:
        items = [carrier] + items
    for d in items:
        width = 2.5 if d is carrier else 1
        if isinstance(d.element, Line):
            seg = _clip_line(d.element.coords, box)
            if seg is None:
                continue
            (ax, ay), (bx, by) = seg
            (ax, ay), (bx, by) = tr(ax, ay), tr(bx, by)
            parts.append(
                '<line x1="%.3f" y1="%.3f" x2="%.3f" y2="%.3f" style="stroke:%s;stroke-width:%g">'
                '<title>%s</title></line>\n'
                % (ax, ay, bx, by, d.colour, width, escape(d.name))
            )
        else:
            xy = _float_xy(d.element)
            if xy is None or not (x0 <= xy[0] <= x1 and y0 <= xy[1] <= y1):
                continue
            px, py = tr(*xy)
            parts.append(
                '<circle cx="%.3f" cy="%.3f" r="3" style="fill:%s"><title>%s</title></circle>\n'
                % (px, py, d.colour, escape(d.name))
            )
            if show_labels:
                parts.append(
                    '<text x="%.3f" y="%.3f" style="font-family:sans-serif;font-size:10;fill:%s">%s</text>\n'
                    % (px + 4, py - 4, d.colour, escape(d.name))
                )
    parts.append(SVG_FOOTER)
    return "".join(parts)
