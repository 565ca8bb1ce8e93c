"""Deterministic SVG pictures of Mondrian diagrams and fronts."""

from __future__ import annotations

from typing import Optional, Union

from .front import Crossing, FrontDiagram, LeftCusp, RightCusp
from .mondrian import IteratedMondrianDiagram, MondrianDiagram

__all__ = ["render_svg", "render_mondrian", "render_front", "render_stages"]

SCALE = 20
MARGIN = 20


def _num(v) -> str:
    return ("%.2f" % float(v)).rstrip("0").rstrip(".")


def _wrap(body: list[str], width, height) -> str:
    w, h = _num(width + 2 * MARGIN), _num(height + 2 * MARGIN)
    head = ('<svg xmlns="http://www.w3.org/2000/svg" width="%s" height="%s" viewBox="0 0 %s %s">'
            % (w, h, w, h))
    return "\n".join([head, '<g transform="translate(%d,%d)">' % (MARGIN, MARGIN)] + body + ["</g>", "</svg>", ""])


def _mondrian_body(m: MondrianDiagram, rects: Optional[IteratedMondrianDiagram] = None):
    if not m.horizontals:
        return [], 0, 0
    x0 = min(h.x0 for h in m.horizontals)
    x1 = max(h.x1 for h in m.horizontals)
    ytop = max(h.y for h in m.horizontals)
    ybot = min(h.y for h in m.horizontals)

    def X(x):
        return (x - x0) * SCALE

    def Y(y):
        return (ytop - y) * SCALE

    body = []
    if rects is not None:
        for k in range(rects.num_circles):
            a, b, lo, hi = rects.rectangle(k)
            body.append('<rect class="circle" x="%s" y="%s" width="%s" height="%s" fill="#eef" stroke="none"/>'
                        % (_num(X(a)), _num(Y(hi)), _num(X(b) - X(a)), _num(Y(lo) - Y(hi))))
    for h in sorted(m.horizontals, key=lambda h: h.id):
        body.append('<line class="horizontal" x1="%s" y1="%s" x2="%s" y2="%s" stroke="black" stroke-width="2"/>'
                    % (_num(X(h.x0)), _num(Y(h.y)), _num(X(h.x1)), _num(Y(h.y))))
    for v in sorted(m.verticals, key=lambda v: v.id):
        body.append('<line class="vertical" x1="%s" y1="%s" x2="%s" y2="%s" stroke="#c00" stroke-width="1.5"/>'
                    % (_num(X(v.x)), _num(Y(v.y0)), _num(X(v.x)), _num(Y(v.y1))))
    return body, (x1 - x0) * SCALE, (ytop - ybot) * SCALE


def render_mondrian(m: Union[MondrianDiagram, IteratedMondrianDiagram]) -> str:
    if isinstance(m, IteratedMondrianDiagram):
        body, w, h = _mondrian_body(m.diagram, m)
    else:
        body, w, h = _mondrian_body(m)
    return _wrap(body, w, h)


def _front_body(f: FrontDiagram):
    s = SCALE
    body = []
    n, widest = 0, 0
    for e, ev in enumerate(f.events):
        xa, xb, xm = e * s, (e + 1) * s, e * s + s / 2
        i = ev.i
        paths = []
        if isinstance(ev, LeftCusp):
            for j in range(1, n + 1):
                paths.append("M%s %s L%s %s" % (_num(xa), _num(j * s), _num(xb), _num((j if j < i else j + 2) * s)))
            cy = (i + 0.5) * s
            for j in (i, i + 1):
                paths.append("M%s %s Q%s %s %s %s" % (_num(xm), _num(cy), _num(xb - s / 8), _num(j * s),
                                                      _num(xb), _num(j * s)))
            n += 2
        elif isinstance(ev, RightCusp):
            cy = (i + 0.5) * s
            for j in range(1, n + 1):
                if j < i or j > i + 1:
                    paths.append("M%s %s L%s %s" % (_num(xa), _num(j * s), _num(xb), _num((j if j < i else j - 2) * s)))
                else:
                    paths.append("M%s %s Q%s %s %s %s" % (_num(xa), _num(j * s), _num(xa + s / 8), _num(j * s),
                                                          _num(xm), _num(cy)))
            n -= 2
        else:
            for j in range(1, n + 1):
                k = 2 * i + 1 - j if j in (i, i + 1) else j
                paths.append("M%s %s L%s %s" % (_num(xa), _num(j * s), _num(xb), _num(k * s)))
            body.append('<circle class="crossing" cx="%s" cy="%s" r="2.5" fill="#c00"/>'
                        % (_num(xm), _num((i + 0.5) * s)))
        widest = max(widest, n)
        body.append('<path class="%s" d="%s" fill="none" stroke="black" stroke-width="1.5"/>'
                    % (type(ev).__name__, " ".join(paths)))
    return body, len(f.events) * s, (widest + 1) * s


def render_front(f: FrontDiagram) -> str:
    body, w, h = _front_body(f)
    return _wrap(body, w, h)


def render_svg(obj) -> str:
    """SVG text for a Mondrian diagram, an iterated one or a front."""
    if isinstance(obj, FrontDiagram):
        return render_front(obj)
    return render_mondrian(obj)


def render_stages(im: IteratedMondrianDiagram, f: FrontDiagram) -> str:
    """Outer layer, full nested drawing and front, stacked top to bottom."""
    parts = [_mondrian_body(im.layers()[None]), _mondrian_body(im.diagram, im), _front_body(f)]
    body, y, width = [], 0, 0
    for k, (b, w, h) in enumerate(parts):
        body.append('<g class="stage" id="stage%d" transform="translate(0,%s)">' % (k + 1, _num(y)))
        body += b
        body.append("</g>")
        y += h + 2 * MARGIN
        width = max(width, w)
    return _wrap(body, width, y - 2 * MARGIN)
