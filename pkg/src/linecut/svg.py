"""SVG rendering of arrangements and drawings (presentation only).

Geometry is clipped exactly; conversion to floats happens only when the
markup is written.  The y axis is flipped so that up is up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .drawing import Drawing
from .geometry import GeneralLine, Point
from .mu import Arrangement


@dataclass(frozen=True)
class Viewport:
    xmin: Fraction
    ymin: Fraction
    xmax: Fraction
    ymax: Fraction

    @classmethod
    def around(cls, pts: Iterable[Point], margin: Fraction = Fraction(1, 10)) -> "Viewport":
        pts = list(pts)
        if not pts:
            return cls(Fraction(-1), Fraction(-1), Fraction(1), Fraction(1))
        xs, ys = [p.x for p in pts], [p.y for p in pts]
        w, h = max(xs) - min(xs), max(ys) - min(ys)
        pad = max(w, h) * margin or Fraction(1)
        return cls(min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)

    def contains(self, p: Point) -> bool:
        return self.xmin <= p.x <= self.xmax and self.ymin <= p.y <= self.ymax


def clip_line(line: GeneralLine, vp: Viewport) -> Optional[tuple[Point, Point]]:
    """The part of ``line`` inside the viewport, or ``None``."""
    hits = set()
    if not line.is_horizontal():
        for y in (vp.ymin, vp.ymax):
            p = Point(line.x_at(y), y)
            if vp.contains(p):
                hits.add(p)
    if not line.is_vertical():
        for x in (vp.xmin, vp.xmax):
            p = Point(x, line.y_at(x))
            if vp.contains(p):
                hits.add(p)
    if len(hits) < 2:
        return None
    pts = sorted(hits)
    return pts[0], pts[-1]


def _f(v: Fraction) -> str:
    return f"{float(v):.6g}"


def _header(vp: Viewport) -> list[str]:
    w, h = vp.xmax - vp.xmin, vp.ymax - vp.ymin
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_f(vp.xmin)} {_f(-vp.ymax)} {_f(w)} {_f(h)}" width="600" height="600" '
        f'preserveAspectRatio="none">',
    ]


def _stroke(vp: Viewport) -> Fraction:
    return max(vp.xmax - vp.xmin, vp.ymax - vp.ymin) / 400


def _line_el(p: Point, q: Point, cls: str, width: Fraction) -> str:
    return (
        f'<line class="{cls}" x1="{_f(p.x)}" y1="{_f(-p.y)}" x2="{_f(q.x)}" y2="{_f(-q.y)}" '
        f'stroke-width="{_f(width)}"/>'
    )


def _lines(lines: Sequence[GeneralLine], vp: Viewport, cls: str) -> list[str]:
    out = []
    for l in lines:
        seg = clip_line(l, vp)
        if seg is not None:
            out.append(_line_el(seg[0], seg[1], cls, _stroke(vp)))
    return out


def svg_export(
    subject: Union[Arrangement, Drawing],
    viewport: Optional[Viewport] = None,
    lines: Optional[Sequence[GeneralLine]] = None,
    labels: bool = True,
) -> str:
    """Render an arrangement (lines and vertices) or a drawing (vertices and
    edges, plus the supporting ``lines`` if given)."""
    if isinstance(subject, Arrangement):
        pts = subject.points()
        vp = viewport or Viewport.around(pts)
        body = ['<g stroke="#555" fill="none">', *_lines(subject.lines, vp, "line"), "</g>"]
        r = _stroke(vp) * 2
        body.append('<g fill="#c00">')
        body += [f'<circle class="vertex" cx="{_f(p.x)}" cy="{_f(-p.y)}" r="{_f(r)}"/>' for p in pts]
        body.append("</g>")
    else:
        pts = list(subject.points)
        vp = viewport or Viewport.around(pts)
        body = []
        if lines is not None:
            body += ['<g stroke="#bbb" fill="none">', *_lines(lines, vp, "support"), "</g>"]
        body.append('<g stroke="#000" fill="none">')
        body += [_line_el(pts[a], pts[b], "edge", _stroke(vp)) for a, b in subject.edges]
        body.append("</g>")
        r = _stroke(vp) * 2
        body.append('<g fill="#06c">')
        body += [f'<circle class="vertex" cx="{_f(p.x)}" cy="{_f(-p.y)}" r="{_f(r)}"/>' for p in pts]
        body.append("</g>")
        if labels:
            size = _stroke(vp) * 8
            body.append(f'<g font-size="{_f(size)}" fill="#333">')
            body += [f'<text x="{_f(p.x + r)}" y="{_f(-p.y - r)}">{v}</text>' for v, p in enumerate(pts)]
            body.append("</g>")
    return "\n".join(_header(vp) + body + ["</svg>"]) + "\n"
