"""Front diagrams as left-to-right sequences of Morse events.

Strands at each x-slice are numbered ``1..n`` from the top.  An event
``LeftCusp(i)`` creates strands ``i`` and ``i + 1``, ``RightCusp(i)`` joins
and removes them, ``Crossing(i)`` exchanges them.  Orientation is recorded
as the direction (+1 right, -1 left) of the upper strand at every left
cusp; everything else follows by propagation.

At a crossing the strand with the smaller slope, the one running from top
left to bottom right, is in front.  With that convention a crossing is
positive exactly when both strands move the same way, and the resolution
into two horizontal arcs is the A-smoothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .diagram import (
    LinkDiagram,
    NestingForest,
    PDError,
    StateResolution,
    from_records,
    nesting_forest,
    predicted_tb as _predicted_tb,
    s_plus,
    split_components,
    writhe,
)
from .mondrian import IteratedMondrianDiagram, iterated_mondrian

__all__ = [
    "LeftCusp",
    "RightCusp",
    "Crossing",
    "FrontDiagram",
    "FrontError",
    "TbReport",
    "mondrian_to_front",
    "front_of_diagram",
    "concatenate",
    "tb",
    "predicted_tb",
    "validate_front",
    "front_to_pd",
    "reverse_orientation",
]


class FrontError(ValueError):
    """Raised for malformed fronts or inputs that cannot become fronts."""


@dataclass(frozen=True)
class LeftCusp:
    i: int
    code = "LC"


@dataclass(frozen=True)
class RightCusp:
    i: int
    code = "RC"


@dataclass(frozen=True)
class Crossing:
    i: int
    code = "X"


Event = Union[LeftCusp, RightCusp, Crossing]
_CODES = {"LC": LeftCusp, "RC": RightCusp, "X": Crossing}


@dataclass(frozen=True)
class FrontDiagram:
    """Event sequence plus orientation and provenance.

    ``orientation[e]`` is the direction of the upper strand born at left cusp
    event ``e``.  ``provenance[e]`` is ``("circle", k)`` for cusps and
    ``("crossing", x)`` for crossings when the front came from a diagram.
    """

    events: tuple[Event, ...]
    orientation: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)

    @property
    def crossings(self) -> list[int]:
        """Event indices of the crossings, left to right."""
        return [e for e, ev in enumerate(self.events) if isinstance(ev, Crossing)]

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    @property
    def right_cusps(self) -> int:
        return sum(isinstance(ev, RightCusp) for ev in self.events)

    @property
    def left_cusps(self) -> int:
        return sum(isinstance(ev, LeftCusp) for ev in self.events)

    def kernel_input(self) -> tuple[list[int], list[int]]:
        """``(kinds, positions)``: 0 left cusp, 1 right cusp, 2 crossing; 0-based upper strand."""
        kinds = [0 if isinstance(ev, LeftCusp) else 1 if isinstance(ev, RightCusp) else 2 for ev in self.events]
        return kinds, [ev.i - 1 for ev in self.events]

    def slices(self) -> list[list[int]]:
        """Orientation labels top to bottom after each event (``slices()[0]`` is empty)."""
        cur: list[int] = []
        out = [list(cur)]
        for e, ev in enumerate(self.events):
            i = ev.i - 1
            if isinstance(ev, LeftCusp):
                o = self.orientation.get(e)
                if o not in (1, -1):
                    raise FrontError("left cusp %d has no orientation" % e)
                cur[i:i] = [o, -o]
            elif isinstance(ev, RightCusp):
                if cur[i] != -cur[i + 1]:
                    raise FrontError("right cusp %d joins strands moving the same way" % e)
                del cur[i:i + 2]
            else:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
            out.append(list(cur))
        return out

    def crossing_signs(self) -> list[int]:
        sl = self.slices()
        return [1 if sl[e][ev.i - 1] == sl[e][ev.i] else -1
                for e, ev in enumerate(self.events) if isinstance(ev, Crossing)]

    def to_json(self) -> dict:
        return {
            "events": [[ev.code, ev.i] for ev in self.events],
            "orientation": {str(e): o for e, o in sorted(self.orientation.items())},
            "provenance": {str(e): list(p) for e, p in sorted(self.provenance.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "FrontDiagram":
        events = tuple(_CODES[c](i) for c, i in data["events"])
        orientation = {int(e): o for e, o in data.get("orientation", {}).items()}
        provenance = {int(e): tuple(p) for e, p in data.get("provenance", {}).items()}
        return cls(events, orientation, provenance)


@dataclass(frozen=True)
class TbReport:
    writhe: int
    right_cusps: int
    tb: int
    predicted_tb: Optional[int] = None

    def to_json(self) -> dict:
        return {"writhe": self.writhe, "right_cusps": self.right_cusps, "tb": self.tb,
                "predicted_tb": self.predicted_tb}


def predicted_tb(d: LinkDiagram) -> int:
    """Writhe minus the number of all-A state circles."""
    return _predicted_tb(d)


def tb(f: FrontDiagram, d: Optional[LinkDiagram] = None) -> TbReport:
    """Thurston-Bennequin number: front writhe minus right cusps."""
    w = sum(f.crossing_signs())
    rc = f.right_cusps
    return TbReport(w, rc, w - rc, predicted_tb(d) if d is not None else None)


def validate_front(f: FrontDiagram) -> list[str]:
    """Every violated front invariant, as readable messages."""
    out = []
    n = 0
    for e, ev in enumerate(f.events):
        if not isinstance(ev, (LeftCusp, RightCusp, Crossing)):
            out.append("event %d has unknown type" % e)
            return out
        if isinstance(ev, LeftCusp):
            if not 1 <= ev.i <= n + 1:
                out.append("event %d: left cusp index %d out of range 1..%d" % (e, ev.i, n + 1))
                return out
            if f.orientation.get(e) not in (1, -1):
                out.append("event %d: left cusp without orientation" % e)
            n += 2
        else:
            if n < 2 or not 1 <= ev.i <= n - 1:
                kind = "strand underflow" if n < 2 else "index %d out of range 1..%d" % (ev.i, n - 1)
                out.append("event %d: %s" % (e, kind))
                return out
            if isinstance(ev, RightCusp):
                n -= 2
    if n:
        out.append("%d strands left open at the right end" % n)
    if f.left_cusps != f.right_cusps:
        out.append("%d left cusps but %d right cusps" % (f.left_cusps, f.right_cusps))
    for e in f.orientation:
        if not (0 <= e < len(f.events) and isinstance(f.events[e], LeftCusp)):
            out.append("orientation given for non-cusp event %d" % e)
    for e in f.provenance:
        if not 0 <= e < len(f.events):
            out.append("provenance for missing event %d" % e)
    if not out:
        try:
            f.slices()
        except FrontError as exc:
            out.append(str(exc))
    return out


def reverse_orientation(f: FrontDiagram) -> FrontDiagram:
    return FrontDiagram(f.events, {e: -o for e, o in f.orientation.items()}, dict(f.provenance))


def concatenate(fronts: list[FrontDiagram]) -> FrontDiagram:
    """Place fronts side by side (a split union)."""
    events, orientation, provenance = [], {}, {}
    for f in fronts:
        base = len(events)
        events += f.events
        orientation.update({base + e: o for e, o in f.orientation.items()})
        provenance.update({base + e: p for e, p in f.provenance.items()})
    return FrontDiagram(tuple(events), orientation, provenance)


# -- from iterated Mondrian diagrams -----------------------------------------------------


def _side_labels(d: LinkDiagram, r: StateResolution, forest: NestingForest, im: IteratedMondrianDiagram, k: int):
    """Directions of the pieces of eye ``k``'s bottom (left to right) and top (right to left) strands."""
    reading = list(im.reading(k))
    eps = [x for x, _ in forest.endpoints[k]]
    m = len(eps)
    shift = next((s for s in range(max(m, 1)) if reading == eps[s:] + eps[:s]), None)
    if shift is None:
        raise FrontError("rectangle %d does not match the counterclockwise order of circle %d" % (k, k))
    rev = forest.reversed_[k]
    circle = r.circles[k]

    def seg_dir(i):
        c0 = forest.order[k][(i + shift) % m]
        c1 = forest.order[k][(i + 1 + shift) % m]
        _, direction = circle[c0 if rev else c1]
        return direction * (-1 if rev else 1)

    x0, x1, yb, yt = im.rectangle(k)
    by = im.diagram.by_label()
    lo, hi = by[("bot", k)].id, by[("top", k)].id
    p = sum(1 for v in im.diagram.verticals if lo in (v.bottom, v.top))
    bottom = [seg_dir((j - 1) % m) for j in range(p + 1)]
    top = [-seg_dir((p - 1 + j) % m) for j in range(m - p + 1)]
    return bottom, top


def mondrian_to_front(im: IteratedMondrianDiagram, d: LinkDiagram, r: Optional[StateResolution] = None,
                      forest: Optional[NestingForest] = None) -> FrontDiagram:
    """Turn rectangles into eyes and verticals into crossings of adjacent strands."""
    if r is None:
        r = s_plus(d)
    if forest is None:
        forest = nesting_forest(d, r)
    if len(r.circles) != im.num_circles or len(im.diagram.verticals) != d.n:
        raise FrontError("iterated Mondrian diagram does not come from this diagram")
    diag = im.diagram
    hs = {h.id: h for h in diag.horizontals}
    pieces = {k: _side_labels(d, r, forest, im, k) for k in range(im.num_circles)}
    # attachment x-coordinates per side, increasing
    attach: dict[tuple, list[int]] = {}
    for v in diag.verticals:
        for hid in (v.bottom, v.top):
            attach.setdefault(hs[hid].label, []).append(v.x)
    for xs in attach.values():
        xs.sort()

    def label(strand, x, right: bool) -> int:
        k, side = strand
        xs = attach.get(("bot" if side == "L" else "top", k), [])
        before = sum(1 for a in xs if a < x or (right and a == x))
        if side == "L":
            return pieces[k][0][before]
        return pieces[k][1][len(xs) - before]

    queue = []
    for k in range(im.num_circles):
        x0, x1, yb, yt = im.rectangle(k)
        queue.append((x0, -yt, 0, k))
        queue.append((x1, -yt, 1, k))
    for v in diag.verticals:
        queue.append((v.x, -v.y1, 2, v.label))
    queue.sort()
    height = {}
    for k in range(im.num_circles):
        _, _, yb, yt = im.rectangle(k)
        height[(k, "U")], height[(k, "L")] = yt, yb
    strands: list[tuple[int, str]] = []
    events, orientation, provenance = [], {}, {}
    vert = {v.label: v for v in diag.verticals}
    for x, _, kind, obj in queue:
        e = len(events)
        if kind == 0:
            yt = height[(obj, "U")]
            i = sum(1 for s in strands if height[s] > yt)
            strands[i:i] = [(obj, "U"), (obj, "L")]
            events.append(LeftCusp(i + 1))
            orientation[e] = label((obj, "U"), x, False)
            provenance[e] = ("circle", obj)
        elif kind == 1:
            i = strands.index((obj, "U"))
            if strands[i + 1] != (obj, "L"):
                raise FrontError("eye %d is not closed by adjacent strands" % obj)
            del strands[i:i + 2]
            events.append(RightCusp(i + 1))
            provenance[e] = ("circle", obj)
        else:
            v = vert[obj]
            top_h, bot_h = hs[v.top].label, hs[v.bottom].label
            s_hi = (top_h[1], "U" if top_h[0] == "top" else "L")
            s_lo = (bot_h[1], "U" if bot_h[0] == "top" else "L")
            i = strands.index(s_hi)
            if i + 1 >= len(strands) or strands[i + 1] != s_lo:
                raise FrontError("vertical %d does not join adjacent strands" % obj)
            tl, bl = label(s_hi, x, False), label(s_lo, x, False)
            tr, br = label(s_hi, x, True), label(s_lo, x, True)
            if tl != br or bl != tr:
                raise FrontError("orientations disagree through crossing %d" % obj)
            sign = 1 if tl == bl else -1
            if sign != d.crossings[obj].sign:
                raise FrontError("crossing %d has sign %d in the front but %d in the diagram"
                                 % (obj, sign, d.crossings[obj].sign))
            events.append(Crossing(i + 1))
            provenance[e] = ("crossing", obj)
    f = FrontDiagram(tuple(events), orientation, provenance)
    problems = validate_front(f)
    if problems:
        raise FrontError("; ".join(problems))
    return f


def _unknot_front(circle: int = 0) -> FrontDiagram:
    return FrontDiagram((LeftCusp(1), RightCusp(1)), {0: 1}, {0: ("circle", circle), 1: ("circle", circle)})


def front_of_diagram(d: LinkDiagram) -> tuple[FrontDiagram, list[IteratedMondrianDiagram]]:
    """Front of a +adequate diagram; split pieces are placed side by side.

    Provenance of every piece refers to the numbering of that piece.
    """
    if d.n == 0:
        return concatenate([_unknot_front(k) for k in range(d.unknots)]), []
    pieces = split_components(d) if not d.is_connected() else [d]
    fronts, ims = [], []
    for p in pieces:
        if p.n == 0:
            fronts.append(_unknot_front())
            continue
        r = s_plus(p)
        forest = nesting_forest(p, r)
        im = iterated_mondrian(p, r, forest)
        fronts.append(mondrian_to_front(im, p, r, forest))
        ims.append(im)
    return concatenate(fronts), ims


# -- back to a planar diagram ----------------------------------------------------------


class _DSU:
    def __init__(self):
        self.parent: dict = {}

    def find(self, a):
        self.parent.setdefault(a, a)
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def front_to_pd(f: FrontDiagram) -> LinkDiagram:
    """The front read as an ordinary oriented link diagram (cusps smoothed)."""
    problems = validate_front(f)
    if problems:
        raise FrontError("; ".join(problems))
    sl = f.slices()
    dsu = _DSU()
    n = 0
    half_edges = []
    for t, ev in enumerate(f.events):
        i = ev.i
        for j in range(1, n + 1):
            dsu.find((t, j))
        if isinstance(ev, LeftCusp):
            for j in range(1, n + 1):
                dsu.union((t, j), (t + 1, j if j < i else j + 2))
            dsu.union((t + 1, i), (t + 1, i + 1))
            n += 2
        elif isinstance(ev, RightCusp):
            for j in range(1, n + 1):
                if j < i or j > i + 1:
                    dsu.union((t, j), (t + 1, j if j < i else j - 2))
            dsu.union((t, i), (t, i + 1))
            n -= 2
        else:
            for j in range(1, n + 1):
                if j not in (i, i + 1):
                    dsu.union((t, j), (t + 1, j))
                else:
                    dsu.find((t + 1, j))
            half_edges.append(t)
    arc_of: dict = {}

    def arc(seg):
        root = dsu.find(seg)
        if root not in arc_of:
            arc_of[root] = len(arc_of) + 1
        return arc_of[root]

    records, hint = [], {}
    for c, t in enumerate(half_edges):
        i = f.events[t].i
        tl, bl = arc((t, i)), arc((t, i + 1))
        tr, br = arc((t + 1, i)), arc((t + 1, i + 1))
        lab = sl[t]
        if lab[i] == 1:      # under strand (bottom left to top right) moves right
            records.append([bl, br, tr, tl])
        else:
            records.append([tr, tl, bl, br])
        hint[c] = 3 if lab[i - 1] == lab[i] else 1
    loops = {dsu.find(s) for s in list(dsu.parent)} - set(arc_of)
    return from_records(records, unknots=len(loops), over_hint=hint)
