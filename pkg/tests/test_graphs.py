import random

import networkx as nx
import pytest

from resnum.errors import (
    Disconnected,
    IndexOutOfRange,
    InvalidEdge,
    InvalidPermutation,
)
from resnum.graphs import (
    Graph,
    distance_matrix,
    from_edge_list,
    is_connected,
    permute,
)


def test_from_edge_list_basic():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.m == 3
    assert g.has_edge(1, 2)
    assert not g.has_edge(0, 2)
    assert g.degrees() == (1, 2, 2, 1)
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_duplicate_edges_collapse():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_self_loop_rejected():
    with pytest.raises(InvalidEdge):
        from_edge_list(3, [(1, 1)])


def test_vertex_out_of_range_rejected():
    with pytest.raises(IndexOutOfRange):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(IndexOutOfRange):
        from_edge_list(3, [(-1, 0)])


def test_with_edge_is_persistent():
    g = from_edge_list(3, [(0, 1)])
    h = g.with_edge(1, 2)
    assert g.m == 1 and h.m == 2
    assert not g.has_edge(1, 2) and h.has_edge(1, 2)


def test_permute_roundtrip():
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    perm = [3, 0, 4, 1, 2]
    h = permute(g, perm)
    assert h.m == g.m
    inverse = [0] * 5
    for old, new in enumerate(perm):
        inverse[new] = old
    assert permute(h, inverse) == g


def test_permute_rejects_non_bijection():
    g = from_edge_list(3, [(0, 1)])
    with pytest.raises(InvalidPermutation):
        permute(g, [0, 0, 1])
    with pytest.raises(InvalidPermutation):
        permute(g, [0, 1])


def test_connectivity():
    assert is_connected(from_edge_list(1, []))
    assert is_connected(from_edge_list(3, [(0, 1), (1, 2)]))
    assert not is_connected(from_edge_list(3, [(0, 1)]))


def test_distance_matrix_requires_connected():
    with pytest.raises(Disconnected):
        distance_matrix(from_edge_list(4, [(0, 1), (2, 3)]))


def test_distances_match_networkx_on_random_graphs():
    rng = random.Random(1105)
    checked = 0
    while checked < 40:
        n = rng.randint(2, 24)
        p = rng.uniform(0.1, 0.6)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = from_edge_list(n, edges)
        if not is_connected(g):
            continue
        checked += 1
        dm = distance_matrix(g)
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(edges)
        expected = dict(nx.all_pairs_shortest_path_length(G))
        for u in range(n):
            for v in range(n):
                assert dm.dist(u, v) == expected[u][v]


def test_eccentricity_and_symmetry():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    dm = distance_matrix(g)
    assert dm.dist(0, 3) == dm.dist(3, 0) == 3
    assert dm.eccentricity(0) == 3
    assert dm.eccentricity(1) == 2


def test_graph_value_semantics():
    a = from_edge_list(3, [(0, 1)])
    b = from_edge_list(3, [(1, 0)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != from_edge_list(3, [(0, 2)])
    assert Graph(1, (0,)).n == 1
