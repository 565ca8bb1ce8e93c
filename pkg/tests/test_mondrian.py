import networkx as nx
import pytest

from conftest import adequate_cases, diagram
from graphs import double_edge, from_networkx, outer_vertices, with_marks
from maxtb.diagram import PDError, nesting_forest, parse_pd, s_plus
from maxtb.mondrian import (
    Horizontal,
    IteratedMondrianDiagram,
    MondrianDiagram,
    Vertical,
    build_podium,
    contract,
    enhanced_cycles,
    iterated_mondrian,
    mondrian_for_graph,
    same_embedding,
    segment_violations,
)
from maxtb.planar import GraphError


def lowest_and_highest(m):
    ys = [h.y for h in m.horizontals]
    return min(ys), max(ys)


def test_violations_are_reported():
    hs = (Horizontal(0, 0, 0, 6, "a"), Horizontal(1, 2, 0, 6, "b"), Horizontal(2, 1, 2, 4, "c"))
    # the vertical runs straight through "c"
    vs = (Vertical(0, 3, 0, 2, 0, 1, "e"),)
    assert segment_violations(MondrianDiagram(hs, vs))
    ok = (Vertical(0, 1, 0, 2, 0, 1, "e"),)
    assert not segment_violations(MondrianDiagram(hs, ok))


def test_single_vertex():
    g = from_networkx(nx.empty_graph(1))
    m = mondrian_for_graph(g)
    assert len(m.horizontals) == 1 and not m.verticals


def test_disconnected_graph_is_rejected():
    with pytest.raises(GraphError):
        mondrian_for_graph(from_networkx(nx.Graph([(0, 1), (2, 3)])))


@pytest.mark.parametrize("G", [nx.complete_graph(4), nx.wheel_graph(6), nx.path_graph(5),
                               nx.Graph([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])])
def test_every_outer_pair(G):
    g = from_networkx(G)
    for l in outer_vertices(g):
        for u in outer_vertices(g):
            if l == u:
                continue
            m = mondrian_for_graph(with_marks(g, l, u))
            assert not segment_violations(m)
            assert same_embedding(contract(m), g)
            by = m.by_label()
            assert (by[l].y, by[u].y) == lowest_and_highest(m)


def test_multi_edges():
    g = double_edge(double_edge(from_networkx(nx.cycle_graph(3)), 0), 1)
    m = mondrian_for_graph(g)
    assert not segment_violations(m)
    assert same_embedding(contract(m), g)


def test_same_embedding_detects_mirror():
    g = from_networkx(nx.wheel_graph(5))
    flipped = type(g)(g.labels, g.edges, tuple(tuple(reversed(r)) for r in g.rotation))
    assert not same_embedding(g, flipped)
    assert same_embedding(g, g)


def test_json_round_trip():
    m = mondrian_for_graph(from_networkx(nx.complete_graph(4)))
    assert MondrianDiagram.from_json(m.to_json()) == m


def test_enhanced_cycles_and_podium():
    G = nx.Graph([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 3)])
    g = from_networkx(G)
    cycles, tree = enhanced_cycles(g, root_vertex=1)
    blocks = [c for c in cycles if not c.trivial]
    assert len(blocks) == 2
    assert sum(1 for p in tree.parent if p is None) == 1
    for c in blocks:
        top, base = c.boundary[0], c.boundary[1]
        p = build_podium(c, top, base, g)
        assert not segment_violations(p)
        by = p.by_label()
        assert (by[g.labels[base]].y, by[g.labels[top]].y) == lowest_and_highest(p)
        with pytest.raises(GraphError):
            build_podium(c, top, top)


def test_iterated_needs_adequate_input():
    with pytest.raises(PDError):
        iterated_mondrian(parse_pd("X[1,2,2,1]"))


def test_iterated_on_adequate_table():
    for name, m in adequate_cases():
        d = diagram(name, m)
        r = s_plus(d)
        im = iterated_mondrian(d, r)
        assert not segment_violations(im.diagram), name
        assert im.num_circles == r.num_circles
        assert sorted(v.label for v in im.diagram.verticals) == list(range(d.n))
        f = nesting_forest(d, r)
        for k in range(im.num_circles):
            got = list(im.reading(k))
            want = [x for x, _ in f.endpoints[k]]
            assert any(got[i:] + got[:i] == want for i in range(len(got))), (name, m, k)
            x0, x1, lo, hi = im.rectangle(k)
            assert x0 < x1 and lo < hi


def test_rectangles_nest_like_the_forest():
    for name, m in adequate_cases()[:60]:
        im = iterated_mondrian(diagram(name, m))
        for k, p in enumerate(im.parent):
            if p is None:
                continue
            a0, a1, alo, ahi = im.rectangle(k)
            b0, b1, blo, bhi = im.rectangle(p)
            assert b0 < a0 < a1 < b1 and blo < alo < ahi < bhi


def test_iterated_json_and_layers(trefoil):
    im = iterated_mondrian(trefoil)
    assert IteratedMondrianDiagram.from_json(im.to_json()) == im
    layers = im.layers()
    assert None in layers
    assert sum(len(l.verticals) for l in layers.values()) == trefoil.n
