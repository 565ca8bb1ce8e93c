"""Embedded planar multigraphs given by rotation systems.

Edge ``e`` joins ``edges[e][0]`` to ``edges[e][1]``.  It owns two darts:
``2*e`` sits at the first endpoint and ``2*e + 1`` at the second, so the
twin of a dart is ``dart ^ 1``.  ``rotation[v]`` lists the darts at ``v``
counterclockwise.  Faces are traced with the face on the left: after dart
``d`` arrives at ``w``, the walk leaves along the dart just clockwise of
``d ^ 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional

__all__ = ["PlanarGraph", "GraphError", "st_numbering", "blocks"]


class GraphError(ValueError):
    """Raised for invalid or unsupported planar graphs."""


@dataclass(frozen=True)
class PlanarGraph:
    labels: tuple[Hashable, ...]
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]
    edge_labels: tuple[Hashable, ...] = ()
    # dart whose left face is the unbounded one (None: unspecified)
    outer_dart: Optional[int] = None
    marks: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.edge_labels:
            object.__setattr__(self, "edge_labels", tuple(range(len(self.edges))))

    # -- basic queries -------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def tail(self, dart: int) -> int:
        return self.edges[dart >> 1][dart & 1]

    def head(self, dart: int) -> int:
        return self.edges[dart >> 1][1 - (dart & 1)]

    def position(self) -> dict[int, tuple[int, int]]:
        """``dart -> (vertex, index in rotation)``."""
        return {d: (v, i) for v, rot in enumerate(self.rotation) for i, d in enumerate(rot)}

    def next_in_face(self, dart: int, pos=None) -> int:
        pos = pos or self.position()
        w, i = pos[dart ^ 1]
        rot = self.rotation[w]
        return rot[(i - 1) % len(rot)]

    def faces(self) -> list[list[int]]:
        """Dart cycles of the faces (face on the left of each dart)."""
        pos = self.position()
        seen: set[int] = set()
        out = []
        for d0 in range(2 * self.num_edges):
            if d0 in seen:
                continue
            cyc = []
            d = d0
            while d not in seen:
                seen.add(d)
                cyc.append(d)
                d = self.next_in_face(d, pos)
            out.append(cyc)
        return out

    def face_of(self) -> dict[int, int]:
        return {d: f for f, cyc in enumerate(self.faces()) for d in cyc}

    def components(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.labels]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = [False] * self.num_vertices
        out = []
        for v in range(self.num_vertices):
            if seen[v]:
                continue
            seen[v] = True
            stack, comp = [v], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def validate(self):
        """Check loops, rotation consistency and the Euler relation."""
        for e, (a, b) in enumerate(self.edges):
            if a == b:
                raise GraphError("edge %d is a loop" % e)
        darts = sorted(d for rot in self.rotation for d in rot)
        if darts != list(range(2 * self.num_edges)):
            raise GraphError("rotation system does not list every dart once")
        for v, rot in enumerate(self.rotation):
            for d in rot:
                if self.tail(d) != v:
                    raise GraphError("dart %d listed at the wrong vertex" % d)
        if self.num_vertices == 0:
            return
        comps = self.components()
        nf = len(self.faces())
        # faces are traced per component, so each one contributes its own outer face
        isolated = sum(1 for c in comps if len(c) == 1 and not self.rotation[c[0]])
        expected = 2 * len(comps) - isolated
        if self.num_vertices - self.num_edges + nf != expected:
            raise GraphError("rotation system is not a planar embedding (V - E + F = %d)"
                             % (self.num_vertices - self.num_edges + nf))
        for key in ("u", "l"):
            if key in self.marks and self.outer_dart is not None:
                v = self.marks[key]
                outer = set(self.faces()[self.face_of()[self.outer_dart]])
                if self.rotation[v] and not any(self.tail(d) == v for d in outer):
                    raise GraphError("mark %s is not on the unbounded face" % key)

    # -- editing -------------------------------------------------------

    def with_edge(self, a: int, after_a: Optional[int], b: int, after_b: Optional[int], label=None) -> "PlanarGraph":
        """Add edge ``a -- b`` in the corners just counterclockwise of the given darts.

        Both corners must lie on the same face; ``None`` stands for the only
        corner of an isolated vertex.
        """
        e = self.num_edges
        rot = [list(r) for r in self.rotation]
        for v, after, dart in ((a, after_a, 2 * e), (b, after_b, 2 * e + 1)):
            if after is None:
                rot[v].append(dart)
            else:
                rot[v].insert(rot[v].index(after) + 1, dart)
        return PlanarGraph(self.labels, self.edges + ((a, b),), tuple(tuple(r) for r in rot),
                           self.edge_labels + (label if label is not None else ("dummy", e),),
                           self.outer_dart, dict(self.marks))

    def subgraph(self, edge_ids: Iterable[int], vertex_ids: Optional[Iterable[int]] = None) -> "PlanarGraph":
        """Restriction to some edges, keeping the induced rotation order."""
        edge_ids = sorted(set(edge_ids))
        verts = set(vertex_ids or ())
        for e in edge_ids:
            verts.update(self.edges[e])
        verts = sorted(verts)
        vmap = {v: i for i, v in enumerate(verts)}
        emap = {e: i for i, e in enumerate(edge_ids)}
        rot = []
        for v in verts:
            rot.append(tuple(2 * emap[d >> 1] + (d & 1) for d in self.rotation[v] if (d >> 1) in emap))
        edges = tuple((vmap[self.edges[e][0]], vmap[self.edges[e][1]]) for e in edge_ids)
        return PlanarGraph(tuple(self.labels[v] for v in verts), edges, tuple(rot),
                           tuple(self.edge_labels[e] for e in edge_ids))

    def to_json(self) -> dict:
        return {
            "labels": [repr(x) if not isinstance(x, (int, str)) else x for x in self.labels],
            "edges": [list(e) for e in self.edges],
            "rotation": [list(r) for r in self.rotation],
            "outer_dart": self.outer_dart,
            "marks": dict(self.marks),
        }

    @classmethod
    def from_edges(cls, n: int, edges: list[tuple[int, int]], rotation: list[list[int]], **kw) -> "PlanarGraph":
        return cls(tuple(range(n)), tuple(tuple(e) for e in edges), tuple(tuple(r) for r in rotation), **kw)


def blocks(g: PlanarGraph) -> tuple[list[list[int]], list[int]]:
    """Biconnected components as edge-id lists, plus the cut vertices.

    Parallel edges stay in one block; a lone edge is a block by itself.
    """
    n = g.num_vertices
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (a, b) in enumerate(g.edges):
        adj[a].append((b, e))
        adj[b].append((a, e))
    disc = [-1] * n
    low = [0] * n
    out: list[list[int]] = []
    cuts: set[int] = set()
    counter = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = counter
        counter += 1
        children = 0
        estack: list[int] = []
        # iterative DFS: (vertex, parent edge, neighbour iterator)
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == pe:
                    continue
                if disc[w] < 0:
                    estack.append(e)
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, e, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append(e)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                if u != root:
                    cuts.add(u)
                else:
                    children += 1
                comp = []
                while True:
                    e = estack.pop()
                    comp.append(e)
                    if e == pe:
                        break
                out.append(sorted(comp))
        if children > 1:
            cuts.add(root)
    return out, sorted(cuts)


def st_numbering(g: PlanarGraph, s: int, t: int) -> list[int]:
    """Number vertices ``0..n-1`` so ``s`` is 0, ``t`` is ``n-1`` and every
    other vertex has a lower and a higher neighbour.

    ``g`` must be biconnected and contain an edge ``s -- t``.
    """
    n = g.num_vertices
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (a, b) in enumerate(g.edges):
        adj[a].append((b, e))
        adj[b].append((a, e))
    st_edge = next((e for w, e in adj[s] if w == t), None)
    if st_edge is None:
        raise GraphError("st_numbering needs an edge between s and t")
    # DFS from s taking the s-t edge first
    pre = [-1] * n
    parent = [-1] * n
    low = list(range(n))   # vertex with least preorder reachable
    order = []
    adj[s].sort(key=lambda we: we[1] != st_edge)
    pre[s] = 0
    order.append(s)
    stack = [(s, -1, iter(adj[s]))]
    while stack:
        v, pe, it = stack[-1]
        advanced = False
        for w, e in it:
            if e == pe:
                continue
            if pre[w] < 0:
                pre[w] = len(order)
                order.append(w)
                parent[w] = v
                stack.append((w, e, iter(adj[w])))
                advanced = True
                break
            if pre[w] < pre[low[v]]:
                low[v] = w
        if advanced:
            continue
        stack.pop()
        if stack:
            u = stack[-1][0]
            if pre[low[v]] < pre[low[u]]:
                low[u] = low[v]
    if len(order) != n:
        raise GraphError("graph is not connected")
    if parent[t] != s:
        raise GraphError("internal: t must be the first child of s")
    # sign-list insertion
    nxt = {s: t, t: None}
    prv = {s: None, t: s}
    sign = {s: -1}
    for v in order:
        if v in (s, t):
            continue
        p = parent[v]
        if sign.get(low[v], 1) == -1:
            # insert before p
            a = prv[p]
            nxt[v], prv[v] = p, a
            prv[p] = v
            if a is None:
                raise GraphError("graph is not biconnected")
            nxt[a] = v
            sign[p] = 1
        else:
            b = nxt[p]
            prv[v], nxt[v] = p, b
            nxt[p] = v
            if b is not None:
                prv[b] = v
            sign[p] = -1
    num = [-1] * n
    v, k = s, 0
    while v is not None:
        num[v] = k
        k += 1
        v = nxt[v]
    if num[t] != n - 1:
        raise GraphError("graph is not biconnected")
    return num
