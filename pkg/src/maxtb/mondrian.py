"""Mondrian diagrams and their iterated, nested form.

A Mondrian diagram is a set of disjoint horizontal segments joined by
disjoint vertical ones.  Contracting every horizontal to a point gives an
embedded planar graph; :func:`mondrian_for_graph` goes the other way and
draws a prescribed embedded graph with two marked vertices on the top and
bottom.  :func:`iterated_mondrian` nests such drawings inside thickened
state circles to draw the all-A state of a link diagram.
"""

from __future__ import annotations

import heapq
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Optional

from .diagram import LinkDiagram, NestingForest, PDError, StateResolution, is_plus_adequate, nesting_forest, s_plus
from .planar import GraphError, PlanarGraph, blocks, st_numbering

__all__ = [
    "Horizontal",
    "Vertical",
    "MondrianDiagram",
    "EnhancedCycle",
    "IteratedMondrianDiagram",
    "segment_violations",
    "contract",
    "same_embedding",
    "enhanced_cycles",
    "build_podium",
    "join_podiums",
    "mondrian_for_graph",
    "iterated_mondrian",
    "st_numbering",
]


@dataclass(frozen=True)
class Horizontal:
    id: int
    y: int
    x0: int
    x1: int
    label: Hashable = None


@dataclass(frozen=True)
class Vertical:
    id: int
    x: int
    y0: int
    y1: int
    bottom: int
    top: int
    label: Hashable = None


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(t) for t in v]
    if isinstance(v, Fraction):
        return str(v)
    return v


@dataclass(frozen=True)
class MondrianDiagram:
    horizontals: tuple[Horizontal, ...] = ()
    verticals: tuple[Vertical, ...] = ()

    def horizontal(self, hid: int) -> Horizontal:
        return next(h for h in self.horizontals if h.id == hid)

    def by_label(self) -> dict:
        return {h.label: h for h in self.horizontals}

    def to_json(self) -> dict:
        return {
            "horizontals": [{"id": h.id, "y": _jsonable(h.y), "x": [_jsonable(h.x0), _jsonable(h.x1)],
                             "label": _jsonable(h.label)} for h in self.horizontals],
            "verticals": [{"id": v.id, "x": _jsonable(v.x), "y": [_jsonable(v.y0), _jsonable(v.y1)],
                           "bottom": v.bottom, "top": v.top, "label": _jsonable(v.label)}
                          for v in self.verticals],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MondrianDiagram":
        def lab(v):
            return tuple(lab(t) for t in v) if isinstance(v, list) else v

        hs = tuple(Horizontal(h["id"], h["y"], h["x"][0], h["x"][1], lab(h["label"])) for h in data["horizontals"])
        vs = tuple(Vertical(v["id"], v["x"], v["y"][0], v["y"][1], v["bottom"], v["top"], lab(v["label"]))
                   for v in data["verticals"])
        return cls(hs, vs)


# -- checks and contraction -----------------------------------------------------


def segment_violations(m: MondrianDiagram) -> list[str]:
    """Brute-force pairwise intersection test of all segments."""
    out = []
    hs = {h.id: h for h in m.horizontals}
    for h in m.horizontals:
        if not h.x0 < h.x1:
            out.append("horizontal %s is degenerate" % h.id)
    for i, a in enumerate(m.horizontals):
        for b in m.horizontals[i + 1:]:
            if a.y == b.y and a.x0 <= b.x1 and b.x0 <= a.x1:
                out.append("horizontals %s and %s meet" % (a.id, b.id))
    for i, a in enumerate(m.verticals):
        for b in m.verticals[i + 1:]:
            if a.x == b.x and a.y0 <= b.y1 and b.y0 <= a.y1:
                out.append("verticals %s and %s meet" % (a.id, b.id))
    for v in m.verticals:
        if not v.y0 < v.y1:
            out.append("vertical %s is degenerate" % v.id)
        lo, hi = hs.get(v.bottom), hs.get(v.top)
        if lo is None or hi is None:
            out.append("vertical %s references a missing horizontal" % v.id)
            continue
        if lo.y != v.y0 or not lo.x0 < v.x < lo.x1:
            out.append("vertical %s does not start on horizontal %s" % (v.id, lo.id))
        if hi.y != v.y1 or not hi.x0 < v.x < hi.x1:
            out.append("vertical %s does not end on horizontal %s" % (v.id, hi.id))
        for h in m.horizontals:
            if h.id in (v.bottom, v.top):
                if v.y0 < h.y < v.y1 and h.x0 <= v.x <= h.x1:
                    out.append("vertical %s crosses its own end %s" % (v.id, h.id))
                continue
            if v.y0 <= h.y <= v.y1 and h.x0 <= v.x <= h.x1:
                out.append("vertical %s meets horizontal %s" % (v.id, h.id))
    return out


def contract(m: MondrianDiagram) -> PlanarGraph:
    """Collapse horizontals to vertices and verticals to edges.

    Counterclockwise around a horizontal: verticals above it right to left,
    then verticals below it left to right.
    """
    index = {h.id: i for i, h in enumerate(m.horizontals)}
    edges = []
    above: dict[int, list[tuple]] = {i: [] for i in range(len(index))}
    below: dict[int, list[tuple]] = {i: [] for i in range(len(index))}
    for e, v in enumerate(m.verticals):
        a, b = index[v.bottom], index[v.top]
        edges.append((a, b))
        above[a].append((v.x, 2 * e))
        below[b].append((v.x, 2 * e + 1))
    rotation = []
    for i in range(len(index)):
        rot = [d for _, d in sorted(above[i], reverse=True)] + [d for _, d in sorted(below[i])]
        rotation.append(tuple(rot))
    return PlanarGraph(tuple(h.label for h in m.horizontals), tuple(edges), tuple(rotation),
                       tuple(v.label for v in m.verticals))


def _cyclic_min(seq: list) -> tuple:
    if not seq:
        return ()
    return min(tuple(seq[i:] + seq[:i]) for i in range(len(seq)))


def _embedding_key(g: PlanarGraph) -> dict:
    out = {}
    for v, rot in enumerate(g.rotation):
        seq = [repr(g.edge_labels[d >> 1]) for d in rot]
        out[g.labels[v]] = _cyclic_min(seq)
    return out


def same_embedding(g: PlanarGraph, h: PlanarGraph) -> bool:
    """Equal labelled graphs with equal rotation systems (up to cyclic shift)."""
    if sorted(map(repr, g.labels)) != sorted(map(repr, h.labels)):
        return False
    ge = sorted((repr(g.edge_labels[e]), tuple(sorted(map(repr, (g.labels[a], g.labels[b])))))
                for e, (a, b) in enumerate(g.edges))
    he = sorted((repr(h.edge_labels[e]), tuple(sorted(map(repr, (h.labels[a], h.labels[b])))))
                for e, (a, b) in enumerate(h.edges))
    return ge == he and _embedding_key(g) == _embedding_key(h)


# -- visibility drawing of a biconnected st-graph ----------------------------------


def _outer_corner(g: PlanarGraph, face: set[int], v: int) -> Optional[int]:
    """A dart at ``v`` whose following corner lies on ``face`` (None if isolated)."""
    if not g.rotation[v]:
        return None
    for d in g.rotation[v]:
        if d in face:
            return d
    raise GraphError("vertex %r is not on the chosen face" % (g.labels[v],))


def _biconnect(g: PlanarGraph) -> PlanarGraph:
    """Add edges inside faces until no cut vertex remains."""
    while True:
        comps, cuts = blocks(g)
        if not cuts:
            return g
        block_of = {}
        for b, es in enumerate(comps):
            for e in es:
                block_of[e] = b
        v = cuts[0]
        rot = g.rotation[v]
        pos = g.position()
        for i, d1 in enumerate(rot):
            d2 = rot[(i + 1) % len(rot)]
            if block_of[d1 >> 1] != block_of[d2 >> 1]:
                a, b = g.head(d1), g.head(d2)
                ra = g.rotation[a]
                after_a = ra[(pos[d1 ^ 1][1] - 1) % len(ra)]
                g = g.with_edge(a, after_a, b, d2 ^ 1)
                break


def _draw(g: PlanarGraph, l: int, l_after: Optional[int], u: int, u_after: Optional[int]):
    """Visibility drawing with ``l`` lowest and ``u`` highest.

    ``l_after``/``u_after`` name the corners (on one common face) where the
    virtual edge ``l -- u`` is inserted.  Returns ``(y, x, span)`` keyed by
    vertex / original edge / vertex.
    """
    m = g.num_edges
    aug = g.with_edge(l, l_after, u, u_after)
    e0 = m
    aug = _biconnect(aug)
    num = st_numbering(aug, l, u)
    face_of = aug.face_of()
    nf = max(face_of.values()) + 1
    outer = face_of[2 * e0]
    s_star, t_star = nf, nf + 1
    left, right, up = {}, {}, {}
    for e, (a, b) in enumerate(aug.edges):
        d = 2 * e if num[a] < num[b] else 2 * e + 1
        up[e] = d
        lf, rf = face_of[d], face_of[d ^ 1]
        left[e] = s_star if lf == outer else lf
        right[e] = t_star if rf == outer else rf
    # topological numbering of the dual
    succ: dict[int, list[int]] = {f: [] for f in range(nf + 2)}
    indeg = {f: 0 for f in range(nf + 2)}
    for e in left:
        succ[left[e]].append(right[e])
        indeg[right[e]] += 1
    heap = [f for f in range(nf + 2) if indeg[f] == 0 and f != outer]
    heapq.heapify(heap)
    psi = {}
    while heap:
        f = heapq.heappop(heap)
        psi[f] = len(psi)
        for h in succ[f]:
            indeg[h] -= 1
            if indeg[h] == 0:
                heapq.heappush(heap, h)
    if len(psi) != nf + 1:
        raise GraphError("internal: dual of the st-orientation is not acyclic")
    chain: dict[int, list[int]] = {}
    for e in sorted(left, key=lambda e: num[aug.tail(up[e])]):
        chain.setdefault(left[e], []).append(e)
    width = max(len(c) for c in chain.values()) + 1
    x = {}
    for f, es in chain.items():
        for k, e in enumerate(es):
            x[e] = 3 * (width * psi[f] + k)
    y = {v: num[v] for v in range(g.num_vertices)}
    xs = {e: x[e] for e in range(m)}
    span = {}
    for v in range(g.num_vertices):
        inc = [xs[d >> 1] for d in g.rotation[v]]
        span[v] = (min(inc) - 1, max(inc) + 1) if inc else (-1, 1)
    return y, xs, span


def _diagram(g: PlanarGraph, y, x, span) -> MondrianDiagram:
    hs = tuple(Horizontal(v, y[v], span[v][0], span[v][1], g.labels[v]) for v in range(g.num_vertices))
    vs = []
    for e, (a, b) in enumerate(g.edges):
        lo, hi = (a, b) if y[a] < y[b] else (b, a)
        vs.append(Vertical(e, x[e], y[lo], y[hi], lo, hi, g.edge_labels[e]))
    return MondrianDiagram(hs, tuple(vs))


def _marked_drawing(g: PlanarGraph, l: int, l_after, u: int, u_after) -> MondrianDiagram:
    y, x, span = _draw(g, l, l_after, u, u_after)
    m = _diagram(g, y, x, span)
    if not same_embedding(contract(m), g):
        raise GraphError("internal: drawing does not realize the embedding")
    return m


# -- blocks as enhanced cycles -------------------------------------------------------


@dataclass(frozen=True)
class EnhancedCycle:
    """One block: its boundary cycle on the outer side plus every other edge as a chord.

    ``graph`` is the block as a standalone embedded graph whose labels are
    vertex indices of the source graph; ``outer_dart`` (in ``graph``'s
    numbering) has the block's outer face on its left.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    boundary: tuple[int, ...]
    boundary_edges: tuple[int, ...]
    chords: tuple[int, ...]
    graph: PlanarGraph
    outer_dart: Optional[int] = None

    @property
    def trivial(self) -> bool:
        return len(self.edges) <= 1


@dataclass(frozen=True)
class BlockTree:
    root: int
    parent: tuple[Optional[int], ...]
    cut_vertex: tuple[Optional[int], ...]


def _outer_face_of(g: PlanarGraph) -> int:
    faces = g.faces()
    if g.outer_dart is not None:
        return g.face_of()[g.outer_dart]
    return max(range(len(faces)), key=lambda f: (len(faces[f]), -f))


def enhanced_cycles(g: PlanarGraph, root_vertex: Optional[int] = None) -> tuple[list[EnhancedCycle], BlockTree]:
    """Split a connected embedded graph into blocks and orient the block tree.

    The root block contains ``root_vertex`` (default: the tail of the outer
    dart) and an edge of the outer face.
    """
    if not g.is_connected():
        raise GraphError("enhanced_cycles needs a connected graph")
    if g.num_edges == 0:
        sub = PlanarGraph((0,), (), ((),))
        return [EnhancedCycle((0,), (), (0,), (), (), sub)], BlockTree(0, (None,), (None,))
    comps, _ = blocks(g)
    block_of = {e: b for b, es in enumerate(comps) for e in es}
    faces = g.faces()
    outer = set(faces[_outer_face_of(g)])
    if root_vertex is None:
        start = next(iter(sorted(outer)))
    else:
        start = next(d for d in sorted(outer) if g.tail(d) == root_vertex)
    root = block_of[start >> 1]
    verts_of = [sorted({v for e in es for v in g.edges[e]}) for es in comps]
    # BFS over the block-cut tree
    parent: list[Optional[int]] = [None] * len(comps)
    cut: list[Optional[int]] = [None] * len(comps)
    seen = {root}
    queue = [root]
    while queue:
        b = queue.pop(0)
        for c in range(len(comps)):
            if c in seen:
                continue
            shared = set(verts_of[b]) & set(verts_of[c])
            if shared:
                seen.add(c)
                parent[c] = b
                cut[c] = min(shared)
                queue.append(c)
    out = []
    for b, es in enumerate(comps):
        sub = g.subgraph(es)
        emap = {e: i for i, e in enumerate(sorted(es))}
        if b == root:
            od = 2 * emap[start >> 1] + (start & 1)
        else:
            c = cut[b]
            rot = g.rotation[c]
            pdarts = [i for i, d in enumerate(rot) if block_of[d >> 1] == parent[b]]
            i = pdarts[0]
            # nearest block dart clockwise of a parent dart: its corner holds the parent
            k = 1
            while block_of[rot[(i - k) % len(rot)] >> 1] != b:
                k += 1
            d = rot[(i - k) % len(rot)]
            od = 2 * emap[d >> 1] + (d & 1)
        sub = PlanarGraph(sub.labels, sub.edges, sub.rotation, sub.edge_labels, od)
        fo = sub.faces()[sub.face_of()[od]]
        bverts = tuple(sub.labels[sub.tail(d)] for d in fo)
        bedges = tuple(sorted(es)[d >> 1] for d in fo)
        if len(es) == 1:
            bverts, bedges = bverts[:2], bedges[:1]
        chords = tuple(e for e in sorted(es) if e not in set(bedges))
        out.append(EnhancedCycle(tuple(verts_of[b]), tuple(sorted(es)), bverts, bedges, chords, sub, od))
    return out, BlockTree(root, tuple(parent), tuple(cut))


def build_podium(c: EnhancedCycle, top: int, base: int, g: Optional[PlanarGraph] = None) -> MondrianDiagram:
    """Draw one block with ``base`` the unique lowest and ``top`` the unique highest horizontal.

    Horizontal labels are the source vertex indices (or ``g``'s labels when
    given), vertical labels the source edge labels.
    """
    sub = c.graph
    if not c.edges:
        lab = g.labels[c.vertices[0]] if g is not None else c.vertices[0]
        return MondrianDiagram((Horizontal(0, 0, -1, 1, lab),), ())
    if top not in c.boundary or base not in c.boundary:
        raise GraphError("podium top and base must lie on the boundary cycle")
    if top == base:
        raise GraphError("podium top and base must differ")
    local = {v: i for i, v in enumerate(sub.labels)}
    face = set(sub.faces()[sub.face_of()[c.outer_dart]])
    t, b = local[top], local[base]
    m = _marked_drawing(sub, b, _outer_corner(sub, face, b), t, _outer_corner(sub, face, t))
    if g is None:
        return m
    hs = tuple(Horizontal(h.id, h.y, h.x0, h.x1, g.labels[h.label]) for h in m.horizontals)
    vs = tuple(Vertical(v.id, v.x, v.y0, v.y1, v.bottom, v.top, g.edge_labels[c.edges[v.id]]) for v in m.verticals)
    return MondrianDiagram(hs, vs)


def join_podiums(g: PlanarGraph, cycles: list[EnhancedCycle], tree: BlockTree,
                 l: int, u: int, l_after: Optional[int] = None, u_after: Optional[int] = None) -> MondrianDiagram:
    """Draw all blocks together with ``l`` lowest and ``u`` highest.

    Blocks are glued at their cut vertices by virtual edges drawn inside the
    faces that hold them, so every block lands in the face the embedding
    puts it in; the virtual edges are dropped from the result.
    """
    if l == u:
        raise GraphError("marks must differ")
    face = set(g.faces()[_outer_face_of(g)])
    if l_after is None:
        l_after = _outer_corner(g, face, l)
    if u_after is None:
        u_after = _outer_corner(g, face, u)
    if tree.root >= len(cycles):
        raise GraphError("block tree does not match the blocks")
    return _marked_drawing(g, l, l_after, u, u_after)


def mondrian_for_graph(g: PlanarGraph) -> MondrianDiagram:
    """Draw a connected embedded graph; honour marks ``u`` (top) and ``l`` (bottom).

    ``g.marks`` may hold ``"u"``/``"l"`` vertex indices and ``"u_after"`` /
    ``"l_after"`` darts naming the outer corners to use.  Without marks a
    pair of vertices on the outer face is chosen.
    """
    g.validate()
    if not g.is_connected():
        raise GraphError("mondrian_for_graph needs a connected graph")
    if g.num_vertices == 1:
        return MondrianDiagram((Horizontal(0, 0, -1, 1, g.labels[0]),), ())
    face_list = g.faces()[_outer_face_of(g)]
    face = set(face_list)
    u = g.marks.get("u")
    l = g.marks.get("l")
    if l is None:
        l = next((g.tail(d) for d in face_list if g.tail(d) != u), None)
    if u is None:
        u = next(g.tail(d) for d in face_list if g.tail(d) != l)
    l_after = g.marks.get("l_after", _outer_corner(g, face, l))
    u_after = g.marks.get("u_after", _outer_corner(g, face, u))
    cycles, tree = enhanced_cycles(g, root_vertex=l)
    return join_podiums(g, cycles, tree, l, u, l_after, u_after)


# -- iterated diagrams ---------------------------------------------------------------


@dataclass(frozen=True)
class IteratedMondrianDiagram:
    """Every all-A circle drawn as a thin rectangle, every crossing as a vertical.

    Horizontal labels are ``("bot", k)`` / ``("top", k)`` for the sides of
    circle ``k``; vertical labels are crossing indices.  ``parent`` is the
    nesting forest, ``regions[x]`` the circle whose inside holds chord ``x``
    (``None`` for the outermost region).
    """

    diagram: MondrianDiagram
    parent: tuple[Optional[int], ...]
    regions: tuple[Optional[int], ...]

    @property
    def num_circles(self) -> int:
        return len(self.parent)

    def rectangle(self, k: int) -> tuple[int, int, int, int]:
        """``(x0, x1, y_bottom, y_top)`` of circle ``k``."""
        by = self.diagram.by_label()
        lo, hi = by[("bot", k)], by[("top", k)]
        return lo.x0, lo.x1, lo.y, hi.y

    def reading(self, k: int) -> tuple[int, ...]:
        """Crossings met counterclockwise around rectangle ``k``."""
        by = self.diagram.by_label()
        lo, hi = by[("bot", k)].id, by[("top", k)].id
        bottom = sorted((v.x, v.label) for v in self.diagram.verticals if lo in (v.bottom, v.top))
        top = sorted(((v.x, v.label) for v in self.diagram.verticals if hi in (v.bottom, v.top)), reverse=True)
        return tuple(x for _, x in bottom + top)

    def layers(self) -> dict[Optional[int], MondrianDiagram]:
        """One Mondrian diagram per region: the circles directly inside it, its own sides and its chords."""
        out: dict[Optional[int], MondrianDiagram] = {}
        regions = [None] + [k for k in range(self.num_circles) if k in self.parent]
        for region in regions:
            vs = tuple(v for v in self.diagram.verticals if self.regions[v.label] == region)
            owners = {k for k in range(self.num_circles) if self.parent[k] == region} | {region}
            hs = tuple(h for h in self.diagram.horizontals if h.label[1] in owners)
            out[region] = MondrianDiagram(hs, vs)
        return out

    def to_json(self) -> dict:
        data = self.diagram.to_json()
        data["parent"] = list(self.parent)
        data["regions"] = list(self.regions)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "IteratedMondrianDiagram":
        return cls(MondrianDiagram.from_json(data), tuple(data["parent"]), tuple(data["regions"]))


class _Layout:
    """Mutable exact-coordinate picture used while nesting drawings."""

    def __init__(self):
        self.hs: dict[tuple, list] = {}      # key -> [y, x0, x1]
        self.vs: dict[int, list] = {}        # crossing -> [x, y0, y1, bottom key, top key]

    def thicken(self, k: int, delta: Fraction):
        y, x0, x1 = self.hs.pop(("mid", k))
        self.hs[("top", k)] = [y + delta, x0, x1]
        self.hs[("bot", k)] = [y - delta, x0, x1]
        for v in self.vs.values():
            if v[3] == ("mid", k):
                v[3], v[1] = ("top", k), y + delta
            if v[4] == ("mid", k):
                v[4], v[2] = ("bot", k), y - delta

    def warp(self, h, above: Optional[Fraction] = None, below: Optional[Fraction] = None):
        """Apply ``h`` to x of everything lying entirely above / below a level."""
        def inside(lo, hi):
            return (above is not None and lo >= above) or (below is not None and hi <= below)

        for s in self.hs.values():
            if inside(s[0], s[0]):
                s[1], s[2] = h(s[1]), h(s[2])
        for v in self.vs.values():
            if inside(v[1], v[2]):
                v[0] = h(v[0])


def _piecewise(points: list[tuple[Fraction, Fraction]]):
    """Monotone piecewise-linear map through ``points`` (identity outside)."""
    xs = [p for p, _ in points]

    def h(x):
        if x <= xs[0] or x >= xs[-1]:
            return x
        i = bisect_right(xs, x) - 1
        (p0, q0), (p1, q1) = points[i], points[i + 1]
        return q0 + (x - p0) * (q1 - q0) / (p1 - p0)

    return h


def _spread(items: list[tuple[bool, Fraction]], a: Fraction, b: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Targets for movable items between fixed ones; ``items`` run left to right.

    Returns ``(old, new)`` pairs for the movable items.
    """
    out = []
    run: list[Fraction] = []
    left = a
    for fixed, x in items + [(True, b)]:
        if fixed:
            for j, old in enumerate(run):
                out.append((old, left + (x - left) * (j + 1) / (len(run) + 1)))
            run, left = [], x
        else:
            run.append(x)
    return out


def _component_drawing(g: PlanarGraph, verts: list[int], top: Optional[int], bottom: Optional[int]) -> MondrianDiagram:
    """Draw the component ``verts`` of ``g`` with the given extreme vertices.

    A given extreme uses the corner after the last dart of its rotation.  A
    missing one is any other vertex on the face of that corner.
    """
    es = [e for e, (a, _) in enumerate(g.edges) if a in verts]
    sub = g.subgraph(es, verts)
    local = {v: i for i, v in enumerate(sorted(verts))}
    if top is not None and bottom is not None:
        t, b = local[top], local[bottom]
        return _marked_drawing(sub, b, sub.rotation[b][-1], t, sub.rotation[t][-1])
    m = local[top if top is not None else bottom]
    face = sub.faces()[sub.face_of()[sub.rotation[m][-1]]]
    other = next(sub.tail(d) for d in face if sub.tail(d) != m)
    oc = _outer_corner(sub, set(face), other)
    if top is not None:
        return _marked_drawing(sub, other, oc, m, sub.rotation[m][-1])
    return _marked_drawing(sub, m, sub.rotation[m][-1], other, oc)


def _inner_graph(forest: NestingForest, p: int, children: list[int], upper: list[int], lower: list[int]) -> PlanarGraph:
    """Children of ``p`` plus vertices ``u`` (0) and ``l`` (1) for the two sides of ``p``."""
    labels = [("u",), ("l",)] + list(children)
    rot_chords = [list(reversed(upper)), list(reversed(lower))]
    for k in children:
        rot_chords.append([x for x, t in forest.endpoints[k] if t == "outer"])
    ends: dict[int, list[int]] = {}
    for v, chords in enumerate(rot_chords):
        for x in chords:
            ends.setdefault(x, []).append(v)
    chord_ids = sorted(ends)
    eidx = {x: e for e, x in enumerate(chord_ids)}
    edges = []
    for x in chord_ids:
        if len(ends[x]) != 2:
            raise GraphError("internal: chord %d does not join two inner vertices" % x)
        edges.append(tuple(ends[x]))
    rotation = []
    for v, chords in enumerate(rot_chords):
        rotation.append(tuple(2 * eidx[x] + (0 if ends[x][0] == v else 1) for x in chords))
    return PlanarGraph(tuple(labels), tuple(edges), tuple(rotation), tuple(chord_ids))


def _split_sides(lay: _Layout, forest: NestingForest, p: int):
    """Split the endpoints of ``p`` into the bottom run and the top run, both counterclockwise.

    Returns ``(bottom_run, top_run, kind)`` with ``kind[x]`` one of
    ``B``/``T`` (outer chords hanging below / standing above) and
    ``lower``/``upper`` (inner chords).
    """
    eps = forest.endpoints[p]
    n = len(eps)
    kind: dict[int, str] = {}
    outer = [i for i, (_, t) in enumerate(eps) if t == "outer"]
    for i in outer:
        x = eps[i][0]
        kind[i] = "B" if lay.vs[x][4] == ("bot", p) else "T"
    xs = {i: lay.vs[eps[i][0]][0] for i in outer}
    if outer:
        for j, i in enumerate(outer):
            i2 = outer[(j + 1) % len(outer)]
            lower = len(outer) > 1 and kind[i] == kind[i2] == "B" and xs[i] < xs[i2]
            k = (i + 1) % n
            while k != i2:
                kind[k] = "lower" if lower else "upper"
                k = (k + 1) % n
    else:
        for k in range(n):
            kind[k] = "upper"
    bs = [i for i in outer if kind[i] == "B"]
    ts = [i for i in outer if kind[i] == "T"]
    if bs:
        start = min(bs, key=lambda i: xs[i])
        stop = max(bs, key=lambda i: xs[i])
        length = (stop - start) % n + 1
    else:
        start = (min(ts, key=lambda i: xs[i]) + 1) % n if ts else 0
        length = 0
    order = [(start + j) % n for j in range(n)]
    bottom, top = order[:length], order[length:]
    if any(kind[i] not in ("B", "lower") for i in bottom) or any(kind[i] not in ("T", "upper") for i in top):
        raise GraphError("internal: sides of circle %d are not contiguous" % p)
    bx = [xs[i] for i in bottom if kind[i] == "B"]
    tx = [xs[i] for i in top if kind[i] == "T"]
    if bx != sorted(bx) or tx != sorted(tx, reverse=True):
        raise GraphError("internal: outer chords of circle %d are out of order" % p)
    return ([eps[i][0] for i in bottom], [eps[i][0] for i in top],
            {eps[i][0]: kind[i] for i in range(n)})


def _nest(lay: _Layout, forest: NestingForest, p: int, delta: dict):
    children = forest.children(p)
    lay.thicken(p, delta[p])
    if not children:
        return
    bottom, top, kind = _split_sides(lay, forest, p)
    upper = [x for x in top if kind[x] == "upper"]
    lower = [x for x in bottom if kind[x] == "lower"]
    g = _inner_graph(forest, p, children, upper, lower)
    comps = g.components()
    cu = next(c for c in comps if 0 in c)
    cl = next(c for c in comps if 1 in c)
    if any(c is not cu and c is not cl for c in comps):
        raise GraphError("internal: a child of circle %d is not connected to it" % p)
    if cu is cl:
        parts = [_component_drawing(g, cu, 0, 1)]
    else:
        # lower piece first, stacked below the upper piece
        parts = [_component_drawing(g, c, t, b) for c, t, b in ((cl, None, 1), (cu, 0, None)) if len(c) > 1]
    hs, vs = [], []
    base = 0
    for m in parts:
        lo = min(h.y for h in m.horizontals)
        hs += [(h.label, h.y - lo + base, h.x0, h.x1) for h in m.horizontals]
        vs += [(v.label, v.x, m.horizontal(v.bottom).label, m.horizontal(v.top).label) for v in m.verticals]
        base += max(h.y for h in m.horizontals) - lo + 1
    y_of = {lab: y for lab, y, _, _ in hs}
    content = [(x0, x1) for lab, _, x0, x1 in hs if lab not in (("u",), ("l",))]
    xlo = min([a for a, _ in content] + [x for _, x, _, _ in vs])
    xhi = max([b for _, b in content] + [x for _, x, _, _ in vs])
    y_lo = y_of.get(("l",), min(y_of.values()) - 1)
    y_hi = y_of.get(("u",), max(y_of.values()) + 1)
    yp = lay.hs[("top", p)][0] - delta[p]
    a, b = lay.hs[("top", p)][1], lay.hs[("top", p)][2]
    w = b - a
    sy = 2 * delta[p] / (y_hi - y_lo)

    def fy(y):
        return yp - delta[p] + (y - y_lo) * sy

    def fx(x):
        return a + w / 4 + (Fraction(x) - xlo) * (w / 2) / (xhi - xlo)

    def key(lab):
        if lab == ("u",):
            return ("top", p)
        if lab == ("l",):
            return ("bot", p)
        return ("mid", lab)

    for lab, y, x0, x1 in hs:
        if lab in (("u",), ("l",)):
            continue
        lay.hs[("mid", lab)] = [fy(y), fx(x0), fx(x1)]
        delta[lab] = sy / 4
    for x, vx, lo_lab, hi_lab in vs:
        lo_k, hi_k = key(lo_lab), key(hi_lab)
        lay.vs[x] = [fx(vx), lay.hs[lo_k][0], lay.hs[hi_k][0], lo_k, hi_k]
    # slide the outer chords into the gaps the counterclockwise order asks for
    y_top, y_bot = lay.hs[("top", p)][0], lay.hs[("bot", p)][0]
    items = [(kind[x] == "upper", lay.vs[x][0]) for x in reversed(top)]
    pts = _spread(items, a, b)
    if pts:
        lay.warp(_piecewise([(a, a)] + pts + [(b, b)]), above=y_top)
    items = [(kind[x] == "lower", lay.vs[x][0]) for x in bottom]
    pts = _spread(items, a, b)
    if pts:
        lay.warp(_piecewise([(a, a)] + pts + [(b, b)]), below=y_bot)


def _top_graph(forest: NestingForest, roots: list[int]) -> PlanarGraph:
    ends: dict[int, list[int]] = {}
    for v, k in enumerate(roots):
        for x, t in forest.endpoints[k]:
            if t == "outer":
                ends.setdefault(x, []).append(v)
    chord_ids = sorted(ends)
    eidx = {x: e for e, x in enumerate(chord_ids)}
    edges = tuple(tuple(ends[x]) for x in chord_ids)
    rotation = []
    for v, k in enumerate(roots):
        rot = []
        for x, t in forest.endpoints[k]:
            if t == "outer":
                e = eidx[x]
                rot.append(2 * e + (0 if edges[e][0] == v else 1))
        rotation.append(tuple(rot))
    return PlanarGraph(tuple(roots), edges, tuple(rotation), tuple(chord_ids))


def _compress(values) -> dict:
    return {v: i for i, v in enumerate(sorted(set(values)))}


def iterated_mondrian(d: LinkDiagram, r: Optional[StateResolution] = None,
                      forest: Optional[NestingForest] = None) -> IteratedMondrianDiagram:
    """Nested Mondrian drawing of the all-A state of a connected +adequate diagram."""
    if r is None:
        r = s_plus(d)
    if not is_plus_adequate(r):
        raise PDError("diagram is not +adequate")
    if d.n == 0:
        raise PDError("iterated_mondrian needs at least one crossing")
    if forest is None:
        forest = nesting_forest(d, r)
    roots = forest.roots
    top = _top_graph(forest, roots)
    m0 = mondrian_for_graph(top)
    lay = _Layout()
    for h in m0.horizontals:
        lay.hs[("mid", h.label)] = [Fraction(h.y), Fraction(h.x0), Fraction(h.x1)]
    for v in m0.verticals:
        lab = lambda hid: m0.horizontal(hid).label
        lay.vs[v.label] = [Fraction(v.x), Fraction(v.y0), Fraction(v.y1),
                           ("mid", lab(v.bottom)), ("mid", lab(v.top))]
    delta = {k: Fraction(1, 4) for k in roots}
    queue = list(roots)
    while queue:
        p = queue.pop(0)
        _nest(lay, forest, p, delta)
        queue += forest.children(p)
    if len(lay.vs) != d.n:
        raise GraphError("internal: %d of %d crossings placed" % (len(lay.vs), d.n))
    xs = _compress([c for s in lay.hs.values() for c in s[1:]] + [v[0] for v in lay.vs.values()])
    ys = _compress([s[0] for s in lay.hs.values()])
    keys = sorted(lay.hs, key=lambda k: (k[1], k[0] != "bot"))
    hid = {k: i for i, k in enumerate(keys)}
    hs = tuple(Horizontal(hid[k], ys[lay.hs[k][0]], xs[lay.hs[k][1]], xs[lay.hs[k][2]], k) for k in keys)
    vs = tuple(Vertical(x, xs[v[0]], ys[v[1]], ys[v[2]], hid[v[3]], hid[v[4]], x)
               for x, v in sorted(lay.vs.items()))
    inner_owner = {forest.inner_region[k]: k for k in range(len(forest.parent))}
    regions = tuple(inner_owner.get(forest.chord_region[x]) for x in range(d.n))
    return IteratedMondrianDiagram(MondrianDiagram(hs, vs), tuple(forest.parent), regions)
