"""Combinatorial link diagrams given by planar-diagram (PD) codes.

A crossing ``X[a,b,c,d]`` lists its four arcs counterclockwise, starting at the
incoming under-strand, so the under-strand runs ``a -> c`` and the over-strand
joins ``b`` and ``d``.  A crossing is positive when the over-strand runs
``d -> b``.

Slots ``(x, j)`` (crossing ``x``, position ``j``) double as the darts of the
4-valent projection graph: the dart leaves crossing ``x`` along the arc at
position ``j``, and the counterclockwise rotation at ``x`` is ``j = 0, 1, 2, 3``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional

__all__ = [
    "PDError",
    "Crossing",
    "LinkDiagram",
    "StateResolution",
    "NestingForest",
    "parse_pd",
    "writhe",
    "mirror",
    "s_plus",
    "seifert_circles",
    "is_plus_adequate",
    "nesting_forest",
    "split_components",
    "predicted_tb",
]


class PDError(ValueError):
    """Raised for malformed or non-planar PD input."""


Slot = tuple[int, int]


@dataclass(frozen=True)
class Crossing:
    arcs: tuple[int, int, int, int]
    sign: int

    def over_in(self) -> int:
        """Position (1 or 3) where the over-strand enters."""
        return 3 if self.sign > 0 else 1


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...] = ()
    unknots: int = 0
    components: tuple[tuple[int, ...], ...] = ()

    # -- basic structure -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def arcs(self) -> frozenset[int]:
        return frozenset(a for x in self.crossings for a in x.arcs)

    @property
    def num_components(self) -> int:
        return len(self.components) + self.unknots

    def arc_slots(self) -> dict[int, list[Slot]]:
        ends: dict[int, list[Slot]] = {}
        for i, x in enumerate(self.crossings):
            for j, a in enumerate(x.arcs):
                ends.setdefault(a, []).append((i, j))
        return ends

    def twin(self) -> dict[Slot, Slot]:
        """Map each slot to the slot at the other end of its arc."""
        out = {}
        for a, (s, t) in self.arc_slots().items():
            out[s] = t
            out[t] = s
        return out

    def is_outgoing(self, slot: Slot) -> bool:
        x, j = slot
        if j in (0, 2):
            return j == 2
        return j != self.crossings[x].over_in()

    def arc_tail(self) -> dict[int, Slot]:
        """Slot at which each arc starts (leaves a crossing along the orientation)."""
        return {a: next(s for s in ends if self.is_outgoing(s)) for a, ends in self.arc_slots().items()}

    def faces(self) -> list[list[Slot]]:
        """Faces of the projection, each as the cyclic list of darts with the face on their left."""
        twin = self.twin()
        seen: set[Slot] = set()
        faces = []
        for i in range(self.n):
            for j in range(4):
                d = (i, j)
                if d in seen:
                    continue
                face = []
                while d not in seen:
                    seen.add(d)
                    face.append(d)
                    x, k = twin[d]
                    d = (x, (k - 1) % 4)
                faces.append(face)
        return faces

    def crossing_components(self) -> list[list[int]]:
        """Connected components of the projection graph as lists of crossing indices."""
        twin = self.twin()
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            stack, comp = [start], []
            seen[start] = True
            while stack:
                x = stack.pop()
                comp.append(x)
                for j in range(4):
                    y = twin[(x, j)][0]
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.crossing_components()) + self.unknots <= 1

    # -- serialization ---------------------------------------------------

    def to_pd(self) -> str:
        parts = ["X[%s]" % ",".join(map(str, x.arcs)) for x in self.crossings]
        if self.unknots:
            parts.append("O[%d]" % self.unknots)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "crossings": [list(x.arcs) for x in self.crossings],
            "signs": [x.sign for x in self.crossings],
            "unknots": self.unknots,
            "components": [list(c) for c in self.components],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LinkDiagram":
        d = cls(
            crossings=tuple(Crossing(tuple(a), s) for a, s in zip(data["crossings"], data["signs"])),
            unknots=data.get("unknots", 0),
            components=tuple(tuple(c) for c in data["components"]),
        )
        _check_orientation(d)
        return d

    def __str__(self) -> str:
        return self.to_pd() or "O[0]"


_TOKEN = re.compile(r"([XO])\[([^\]]*)\]")


def parse_pd(text: str) -> LinkDiagram:
    """Parse ``X[a,b,c,d] ... O[n]`` into a validated, oriented diagram.

    Arc labels are renumbered to ``1..2n`` preserving their order.  Raises
    :class:`PDError` on malformed tokens, arcs not used exactly twice,
    inconsistent orientations, or a code that fails the Euler check.
    """
    body = text.strip()
    records: list[list[int]] = []
    unknots = 0
    pos = 0
    for m in _TOKEN.finditer(body):
        if body[pos:m.start()].strip(" ,;\n\t"):
            raise PDError("unexpected text %r" % body[pos:m.start()].strip())
        pos = m.end()
        try:
            nums = [int(v) for v in m.group(2).split(",")] if m.group(2).strip() else []
        except ValueError:
            raise PDError("non-integer entry in %s" % m.group(0)) from None
        if m.group(1) == "X":
            if len(nums) != 4:
                raise PDError("crossing %s needs four arcs" % m.group(0))
            records.append(nums)
        else:
            if len(nums) != 1 or nums[0] < 0:
                raise PDError("bad unknot token %s" % m.group(0))
            unknots += nums[0]
    if body[pos:].strip(" ,;\n\t"):
        raise PDError("unexpected text %r" % body[pos:].strip())
    return from_records(records, unknots)


def from_records(records: Iterable[Iterable[int]], unknots: int = 0, over_hint: Optional[dict] = None) -> LinkDiagram:
    """Build a diagram from raw crossing records (under-strand direction fixed by slot 0)."""
    records = [list(r) for r in records]
    counts: dict[int, int] = {}
    for r in records:
        for a in r:
            counts[a] = counts.get(a, 0) + 1
    bad = sorted(a for a, c in counts.items() if c != 2)
    if bad:
        raise PDError("arc(s) %s do not occur exactly twice" % bad)
    relabel = {a: i + 1 for i, a in enumerate(sorted(counts))}
    records = [[relabel[a] for a in r] for r in records]

    over_in = _orient(records, over_hint or {})
    crossings = tuple(
        Crossing(tuple(r), 1 if over_in[i] == 3 else -1) for i, r in enumerate(records)
    )
    d = LinkDiagram(crossings, unknots)
    d = LinkDiagram(crossings, unknots, _trace_components(d))
    _check_euler(d)
    return d


def _orient(records: list[list[int]], hint: dict[int, int]) -> list[int]:
    """Propagate strand directions; returns, per crossing, the over-strand entry slot."""
    ends: dict[int, list[Slot]] = {}
    for i, r in enumerate(records):
        for j, a in enumerate(r):
            ends.setdefault(a, []).append((i, j))
    incoming: dict[Slot, bool] = {}
    stack: list[Slot] = []

    def assign(slot: Slot, is_in: bool):
        prev = incoming.get(slot)
        if prev is None:
            incoming[slot] = is_in
            stack.append(slot)
        elif prev != is_in:
            raise PDError("inconsistent orientation at crossing %d" % (slot[0] + 1))

    for i in range(len(records)):
        assign((i, 0), True)
        assign((i, 2), False)
    while True:
        while stack:
            x, j = stack.pop()
            is_in = incoming[(x, j)]
            a = records[x][j]
            s, t = ends[a]
            other = t if s == (x, j) else s
            assign(other, not is_in)
            assign((x, (j + 2) % 4), not is_in)
        pending = [i for i in range(len(records)) if (i, 1) not in incoming]
        if not pending:
            break
        # a component that never passes under: follow the arc numbering
        i = pending[0]
        b, dd = records[i][1], records[i][3]
        if i in hint:
            d_in = hint[i] == 3
        else:
            d_in = b == dd + 1 or (dd > b + 1)
        assign((i, 3), d_in)
        assign((i, 1), not d_in)
    return [3 if incoming[(i, 3)] else 1 for i in range(len(records))]


def _trace_components(d: LinkDiagram) -> tuple[tuple[int, ...], ...]:
    twin = d.twin()
    tails = d.arc_tail()
    seen: set[int] = set()
    comps = []
    for a in sorted(tails):
        if a in seen:
            continue
        comp = []
        cur = a
        while cur not in seen:
            seen.add(cur)
            comp.append(cur)
            x, k = twin[tails[cur]]
            cur = d.crossings[x].arcs[(k + 2) % 4]
        comps.append(tuple(comp))
    return tuple(comps)


def _check_orientation(d: LinkDiagram):
    for a, ends in d.arc_slots().items():
        if len(ends) != 2 or sum(d.is_outgoing(s) for s in ends) != 1:
            raise PDError("inconsistent orientation on arc %d" % a)


def _check_euler(d: LinkDiagram):
    if d.n == 0:
        return
    comp_of = {}
    for k, comp in enumerate(d.crossing_components()):
        for x in comp:
            comp_of[x] = k
    nfaces: dict[int, int] = {}
    for face in d.faces():
        k = comp_of[face[0][0]]
        nfaces[k] = nfaces.get(k, 0) + 1
    for k, comp in enumerate(d.crossing_components()):
        v = len(comp)
        if v - 2 * v + nfaces[k] != 2:
            raise PDError("PD code is not planar (V - E + F = %d)" % (nfaces[k] - v))


def writhe(d: LinkDiagram) -> int:
    return sum(x.sign for x in d.crossings)


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Switch every crossing.  Arc labels and orientations are kept."""
    records = []
    for x in d.crossings:
        a, b, c, dd = x.arcs
        records.append((dd, a, b, c) if x.sign > 0 else (b, c, dd, a))
    crossings = tuple(Crossing(r, -x.sign) for r, x in zip(records, d.crossings))
    return LinkDiagram(crossings, d.unknots, d.components)


def switch_crossings(d: LinkDiagram, which: Iterable[int]) -> LinkDiagram:
    which = set(which)
    full = mirror(d)
    crossings = tuple(full.crossings[i] if i in which else x for i, x in enumerate(d.crossings))
    return LinkDiagram(crossings, d.unknots, d.components)


def reverse_components(d: LinkDiagram, which: Optional[Iterable[int]] = None) -> LinkDiagram:
    """Reverse the orientation of the chosen components (all by default)."""
    comps = range(len(d.components)) if which is None else which
    flip = {a for k in comps for a in d.components[k]}
    hint = {}
    records = []
    for i, x in enumerate(d.crossings):
        a, b, c, dd = x.arcs
        under_flip = a in flip
        over_arc = b if x.over_in() == 1 else dd
        over_flip = over_arc in flip
        r = (c, dd, a, b) if under_flip else (a, b, c, dd)
        records.append(r)
        over_in = x.over_in()
        if under_flip:
            over_in = 4 - over_in  # slots rotate by two: 1 <-> 3
        if over_flip:
            over_in = 4 - over_in
        hint[i] = over_in
    return from_records(records, d.unknots, over_hint=hint)


# -- smoothings ------------------------------------------------------------------


@dataclass(frozen=True)
class StateResolution:
    """Circles of a smoothing plus one chord per crossing.

    ``circles[k]`` is the cyclic tuple of ``(arc, direction)`` pairs met along
    circle ``k``; ``direction`` is +1 when the circle runs along the diagram's
    orientation.  Corner ``p`` of a circle sits at the end of its ``p``-th arc.
    ``chords[x]`` holds the two ``(circle, corner)`` endpoints of crossing ``x``.
    """

    circles: tuple[tuple[tuple[int, int], ...], ...]
    chords: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    crossingless_unknots: int = 0
    # slot -> (circle, corner) for the corner that slot's arc ends at
    corner_of_slot: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def num_circles(self) -> int:
        return len(self.circles) + self.crossingless_unknots

    def arc_partition(self) -> list[frozenset[int]]:
        parts = [frozenset(a for a, _ in c) for c in self.circles]
        return sorted(parts, key=min)

    def to_json(self) -> dict:
        return {
            "circles": [[list(p) for p in c] for c in self.circles],
            "chords": [[list(e) for e in ch] for ch in self.chords],
            "crossingless_unknots": self.crossingless_unknots,
        }

    @classmethod
    def from_json(cls, data: dict) -> "StateResolution":
        return cls(
            tuple(tuple(tuple(p) for p in c) for c in data["circles"]),
            tuple(tuple(tuple(e) for e in ch) for ch in data["chords"]),
            data.get("crossingless_unknots", 0),
        )


A_PARTNER = (1, 0, 3, 2)
B_PARTNER = (3, 2, 1, 0)


def _resolve(d: LinkDiagram, partner_of) -> StateResolution:
    """Trace circles when crossing ``x`` joins slot ``j`` to ``partner_of[x][j]``."""
    twin = d.twin()
    corner_of_slot: dict[Slot, tuple[int, int]] = {}
    circles_out = []
    seen: set[Slot] = set()
    for i in range(d.n):
        for j in range(4):
            if (i, j) in seen:
                continue
            k = len(circles_out)
            circle = []
            s = (i, j)
            while s not in seen:
                t = twin[s]
                seen.add(s)
                seen.add(t)
                arc = d.crossings[s[0]].arcs[s[1]]
                circle.append((arc, 1 if d.is_outgoing(s) else -1))
                p = len(circle) - 1
                x, m = t
                nxt = (x, partner_of[x][m])
                corner_of_slot[t] = (k, p)
                corner_of_slot[nxt] = (k, p)
                s = nxt
            circles_out.append(tuple(circle))
    chords = []
    for i in range(d.n):
        pairs = []
        for j in range(4):
            c = corner_of_slot[(i, j)]
            if c not in pairs:
                pairs.append(c)
        chords.append((pairs[0], pairs[-1]) if len(pairs) == 2 else (pairs[0], pairs[0]))
    return StateResolution(tuple(circles_out), tuple(chords), d.unknots, corner_of_slot)


def s_plus(d: LinkDiagram) -> StateResolution:
    """All-A smoothing: each crossing joins positions (0,1) and (2,3)."""
    return _resolve(d, [A_PARTNER] * d.n)


def seifert_circles(d: LinkDiagram) -> StateResolution:
    """Oriented smoothing (A at positive crossings, B at negative ones)."""
    return _resolve(d, [A_PARTNER if x.sign > 0 else B_PARTNER for x in d.crossings])


def is_plus_adequate(r: StateResolution) -> bool:
    return all(p[0] != q[0] for p, q in r.chords)


def predicted_tb(d: LinkDiagram) -> int:
    """Writhe minus the number of all-A state circles."""
    return writhe(d) - s_plus(d).num_circles


# -- nesting of state circles -------------------------------------------------------


@dataclass(frozen=True)
class NestingForest:
    """Containment of all-A state circles on the plane with a chosen outer region.

    ``parent[k]`` is the smallest circle properly containing circle ``k``.
    ``endpoints[k]`` lists the chord endpoints on circle ``k`` counterclockwise
    (interior on the left) as ``(crossing, "inner" | "outer")``.  ``order[k]``
    gives the matching circle corners, and ``reversed_[k]`` says whether the
    counterclockwise reading runs against the stored circle traversal.
    ``side`` tags inner endpoints ``"upper"``/``"lower"`` once assigned.
    """

    parent: tuple[Optional[int], ...]
    endpoints: tuple[tuple[tuple[int, str], ...], ...]
    order: tuple[tuple[int, ...], ...]
    reversed_: tuple[bool, ...]
    chord_region: tuple[int, ...]
    inner_region: tuple[int, ...]
    outer_region: tuple[int, ...]
    root_region: int
    side: dict = field(default_factory=dict, compare=False)

    @property
    def roots(self) -> list[int]:
        return [k for k, p in enumerate(self.parent) if p is None]

    def children(self, k: Optional[int]) -> list[int]:
        return [c for c, p in enumerate(self.parent) if p == k]

    def depth(self, k: int) -> int:
        n = 0
        while self.parent[k] is not None:
            k = self.parent[k]
            n += 1
        return n

    def with_sides(self, side: dict) -> "NestingForest":
        return NestingForest(self.parent, self.endpoints, self.order, self.reversed_,
                             self.chord_region, self.inner_region, self.outer_region,
                             self.root_region, dict(side))

    def to_json(self) -> dict:
        return {
            "parent": list(self.parent),
            "endpoints": [[[x, t] + ([self.side[(k, x)]] if (k, x) in self.side else [])
                           for x, t in eps] for k, eps in enumerate(self.endpoints)],
            "root_region": self.root_region,
        }


def _circle_graph_faces(d: LinkDiagram, r: StateResolution):
    """Faces of the graph formed by the state circles and the crossing chords.

    Returns ``(face_of_dart, nfaces)``; darts are ``("a", slot)`` for arc darts
    and ``("c", x, 0|1)`` for chord darts from corner (0,1) to corner (2,3).
    """
    twin = d.twin()

    def corner(slot: Slot) -> tuple[int, int]:
        return (slot[0], 0 if slot[1] < 2 else 1)

    rot: dict[tuple[int, int], list] = {}
    for x in range(d.n):
        rot[(x, 0)] = [("a", (x, 0)), ("a", (x, 1)), ("c", x, 0)]
        rot[(x, 1)] = [("a", (x, 2)), ("a", (x, 3)), ("c", x, 1)]

    def tail(dart):
        return corner(dart[1]) if dart[0] == "a" else (dart[1], dart[2])

    def dtwin(dart):
        if dart[0] == "a":
            return ("a", twin[dart[1]])
        return ("c", dart[1], 1 - dart[2])

    face_of: dict = {}
    nf = 0
    for v, darts in rot.items():
        for start in darts:
            if start in face_of:
                continue
            dart = start
            while dart not in face_of:
                face_of[dart] = nf
                t = dtwin(dart)
                lst = rot[tail(t)]
                dart = lst[(lst.index(t) - 1) % 3]
            nf += 1
    return face_of, nf, dtwin


def nesting_forest(d: LinkDiagram, r: Optional[StateResolution] = None, outer: Optional[tuple[int, int]] = None) -> NestingForest:
    """Containment forest of the all-A circles of a connected diagram.

    ``outer`` picks the unbounded region as the side of an arc: ``(arc, +1)``
    for the region to the left of the arc's orientation, ``(arc, -1)`` for the
    right.  The default is the right side of the lowest-numbered arc.
    """
    if r is None:
        r = s_plus(d)
    if d.n == 0:
        if d.unknots > 1:
            raise PDError("nesting_forest needs a connected diagram")
        return NestingForest((None,) * d.unknots, ((),) * d.unknots, ((),) * d.unknots,
                             (False,) * d.unknots, (), (0,) * d.unknots, (1,) * d.unknots, 1)
    if not d.is_connected():
        raise PDError("nesting_forest needs a connected diagram; split it first")

    face_of, nf, dtwin = _circle_graph_faces(d, r)
    # regions: faces glued across chords
    parent = list(range(nf))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(d.n):
        parent[find(face_of[("c", x, 0)])] = find(face_of[("c", x, 1)])
    roots = sorted({find(f) for f in range(nf)})
    region_id = {f: i for i, f in enumerate(roots)}

    def region(dart) -> int:
        return region_id[find(face_of[dart])]

    # each circle: region on the left / right of its stored traversal
    tails = d.arc_tail()
    twin = d.twin()
    ncirc = len(r.circles)
    left_reg, right_reg = [], []
    for circle in r.circles:
        arc, direction = circle[0]
        s = tails[arc] if direction > 0 else twin[tails[arc]]
        left_reg.append(region(("a", s)))
        right_reg.append(region(("a", twin[s])))

    if outer is None:
        outer = (min(d.arcs), -1)
    arc, side = outer
    s = tails[arc]
    root_region = region(("a", s)) if side > 0 else region(("a", twin[s]))

    # region tree: BFS from the root region across circles
    nreg = len(roots)
    adj: dict[int, list[tuple[int, int]]] = {g: [] for g in range(nreg)}
    for k in range(ncirc):
        adj[left_reg[k]].append((k, right_reg[k]))
        adj[right_reg[k]].append((k, left_reg[k]))
    inner = [None] * ncirc
    outer_r = [None] * ncirc
    seen = {root_region}
    queue = [root_region]
    while queue:
        g = queue.pop(0)
        for k, h in adj[g]:
            if inner[k] is None:
                outer_r[k], inner[k] = g, h
                if h not in seen:
                    seen.add(h)
                    queue.append(h)
    # the circle bounding a region from outside
    boundary_of = {inner[k]: k for k in range(ncirc)}
    parents = tuple(boundary_of.get(outer_r[k]) for k in range(ncirc))

    chord_region = tuple(region(("c", x, 0)) for x in range(d.n))
    endpoints, order, rev = [], [], []
    for k, circle in enumerate(r.circles):
        flip = left_reg[k] != inner[k]
        corners = list(range(len(circle)))
        if flip:
            corners = corners[::-1]
        eps = []
        for p in corners:
            x = _chord_at(r, k, p)
            eps.append((x, "inner" if chord_region[x] == inner[k] else "outer"))
        endpoints.append(tuple(eps))
        order.append(tuple(corners))
        rev.append(flip)
    return NestingForest(parents, tuple(endpoints), tuple(order), tuple(rev), chord_region,
                         tuple(inner), tuple(outer_r), root_region)


def _chord_at(r: StateResolution, k: int, p: int) -> int:
    for x, (e, f) in enumerate(r.chords):
        if e == (k, p) or f == (k, p):
            return x
    raise KeyError((k, p))


def split_components(d: LinkDiagram) -> list[LinkDiagram]:
    """Connected pieces of a diagram; crossingless circles come out as ``O[1]`` each."""
    pieces = []
    for comp in d.crossing_components():
        records = [list(d.crossings[x].arcs) for x in comp]
        hint = {i: d.crossings[x].over_in() for i, x in enumerate(comp)}
        pieces.append(from_records(records, 0, over_hint=hint))
    pieces.extend(LinkDiagram((), 1, ()) for _ in range(d.unknots))
    return pieces


def diagram_json(d: LinkDiagram) -> str:
    return json.dumps(d.to_json(), sort_keys=True)
