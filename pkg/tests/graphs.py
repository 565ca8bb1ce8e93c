"""Embedded test graphs from networkx planarity embeddings."""

from __future__ import annotations

import random

import networkx as nx

from maxtb.planar import PlanarGraph


def from_networkx(G: nx.Graph, outer_face: int = 0) -> PlanarGraph:
    ok, emb = nx.check_planarity(G)
    if not ok:
        raise ValueError("graph is not planar")
    nodes = sorted(G.nodes)
    idx = {v: i for i, v in enumerate(nodes)}
    edges, dart = [], {}
    for a, b in sorted(tuple(sorted(e)) for e in G.edges):
        e = len(edges)
        edges.append((idx[a], idx[b]))
        dart[(a, b)], dart[(b, a)] = 2 * e, 2 * e + 1
    # networkx lists neighbours clockwise
    rotation = [[dart[(v, w)] for w in reversed(list(emb.neighbors_cw_order(v)))] for v in nodes]
    g = PlanarGraph.from_edges(len(nodes), edges, rotation)
    if g.num_edges:
        faces = g.faces()
        g = PlanarGraph(g.labels, g.edges, g.rotation, outer_dart=faces[outer_face % len(faces)][0])
    g.validate()
    return g


def double_edge(g: PlanarGraph, e: int) -> PlanarGraph:
    """Add a parallel copy of edge ``e`` next to it, bounding a new digon."""
    a, b = g.edges[e]
    new = len(g.edges)
    rot = [list(r) for r in g.rotation]
    ra = rot[a]
    ra.insert(ra.index(2 * e) + 1, 2 * new)
    rb = rot[b]
    rb.insert(rb.index(2 * e + 1), 2 * new + 1)
    h = PlanarGraph(g.labels, g.edges + ((a, b),), tuple(map(tuple, rot)), outer_dart=g.outer_dart)
    h.validate()
    return h


def with_marks(g: PlanarGraph, l: int, u: int) -> PlanarGraph:
    return PlanarGraph(g.labels, g.edges, g.rotation, g.edge_labels, g.outer_dart, {"l": l, "u": u})


def outer_vertices(g: PlanarGraph) -> list[int]:
    face = next(f for f in g.faces() if g.outer_dart in f)
    return sorted({g.tail(d) for d in face})


def atlas_graphs(max_nodes: int = 6):
    for G in nx.graph_atlas_g():
        if 0 < G.number_of_nodes() <= max_nodes and nx.is_connected(G) and nx.check_planarity(G)[0]:
            yield G


def random_planar(rng: random.Random, max_nodes: int = 12) -> nx.Graph:
    """A connected planar graph: random spanning tree plus edges kept while planar."""
    n = rng.randint(2, max_nodes)
    G = nx.Graph()
    G.add_nodes_from(range(n))
    for v in range(1, n):
        G.add_edge(v, rng.randrange(v))
    for _ in range(rng.randint(0, 2 * n)):
        a, b = rng.sample(range(n), 2)
        if not G.has_edge(a, b):
            G.add_edge(a, b)
            if not nx.check_planarity(G)[0]:
                G.remove_edge(a, b)
    return G
