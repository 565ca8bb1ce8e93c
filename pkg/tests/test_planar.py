import networkx as nx
import pytest

from graphs import double_edge, from_networkx
from maxtb.planar import GraphError, PlanarGraph, blocks, st_numbering


def test_euler_on_embedded_graphs():
    for G in (nx.complete_graph(4), nx.cycle_graph(5), nx.path_graph(4), nx.wheel_graph(6)):
        g = from_networkx(G)
        assert g.num_vertices - g.num_edges + len(g.faces()) == 2


def test_bad_rotation_is_rejected():
    # a triangle whose rotation misses a dart
    g = PlanarGraph.from_edges(3, [(0, 1), (1, 2), (2, 0)], [[0], [2, 1], [4, 3]])
    with pytest.raises(GraphError):
        g.validate()


def test_blocks_of_a_bowtie():
    G = nx.Graph([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    bl, cuts = blocks(from_networkx(G))
    assert sorted(len(b) for b in bl) == [3, 3]
    assert cuts == [0]


def test_parallel_edges_share_a_block():
    g = double_edge(from_networkx(nx.path_graph(3)), 0)
    bl, cuts = blocks(g)
    assert sorted(len(b) for b in bl) == [1, 2]
    assert cuts == [1]


@pytest.mark.parametrize("G", [nx.complete_graph(4), nx.cycle_graph(6), nx.wheel_graph(7)])
def test_st_numbering(G):
    g = from_networkx(G)
    s, t = g.edges[0]
    num = st_numbering(g, s, t)
    assert sorted(num) == list(range(g.num_vertices))
    assert num[s] == 0 and num[t] == g.num_vertices - 1
    for v in range(g.num_vertices):
        if v in (s, t):
            continue
        nb = [num[b if a == v else a] for a, b in g.edges if v in (a, b)]
        assert min(nb) < num[v] < max(nb)


def test_components_and_subgraph():
    G = nx.Graph([(0, 1), (1, 2), (3, 4)])
    g = from_networkx(G)
    assert sorted(map(len, g.components())) == [2, 3]
    h = g.subgraph([0, 1])
    assert h.is_connected()


def test_json_round_trip():
    g = from_networkx(nx.wheel_graph(5))
    data = g.to_json()
    assert isinstance(data, dict) and data["edges"]
