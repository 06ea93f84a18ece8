from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ecockernel.graph import (
    Graph,
    connected_components,
    enumerate_connected_sets,
    is_connected_set,
    iter_connected_sets,
    neighborhood,
    remove_vertices,
)
from ecockernel.oracle import connected_sets_by_filter

from helpers import complete_graph, graphs, path_graph, star_graph


def test_construction_rejects_self_loops():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph({0: [1], 1: []})


def test_parallel_edges_collapse():
    g = Graph.from_edges(2, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1
    assert g.neighbors(0) == (1,)


def test_normalized_relabels_densely():
    g, labels = Graph.normalized(["x", "y"], [("x", "z"), ("z", "y")])
    assert labels == ("x", "y", "z")
    assert g.vertices == (0, 1, 2)
    assert sorted(g.edges()) == [(0, 2), (1, 2)]


@given(graphs())
def test_adjacency_invariants(g):
    for v in g.vertices:
        assert v not in g.neighbors(v)
        assert list(g.neighbors(v)) == sorted(g.neighbors(v))
        for u in g.neighbors(v):
            assert v in g.neighbors(u)
    assert g.m == sum(g.degree(v) for v in g.vertices) // 2
    assert g.m == len(list(g.edges()))


def test_components_examples():
    assert connected_components(Graph.from_edges(0, [])) == []
    assert connected_components(path_graph(3)) == [(0, 1, 2)]
    assert connected_components(Graph.from_edges(4, [(0, 1), (2, 3)])) == [(0, 1), (2, 3)]


@given(graphs())
def test_components_form_a_partition(g):
    comps = connected_components(g)
    flat = [v for c in comps for v in c]
    assert len(flat) == len(set(flat))
    assert set(flat) == set(g.vertices)
    assert all(is_connected_set(g, c) for c in comps)
    owner = {v: i for i, c in enumerate(comps) for v in c}
    for u, v in g.edges():
        assert owner[u] == owner[v]
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)


def test_remove_vertices_examples(triangle):
    g = remove_vertices(path_graph(3), [1])
    assert g.vertices == (0, 2)
    assert g.m == 0
    assert remove_vertices(triangle, []) == triangle
    assert remove_vertices(triangle, [0, 1, 2]).n == 0


def test_remove_vertices_keeps_ids_and_original():
    g = path_graph(5)
    h = remove_vertices(g, [0, 2])
    assert h.vertices == (1, 3, 4)
    assert list(h.edges()) == [(3, 4)]
    assert g.n == 5 and g.m == 4


def test_remove_and_neighborhood_reject_foreign_vertices():
    with pytest.raises(ValueError):
        remove_vertices(path_graph(3), [7])
    with pytest.raises(ValueError):
        neighborhood(path_graph(3), [7])


def test_neighborhood_examples():
    star = star_graph(3)
    assert neighborhood(star, [0]) == (1, 2, 3)
    assert neighborhood(star, []) == ()
    assert neighborhood(path_graph(4), [0, 1]) == (2,)


@given(graphs(), st.data())
def test_components_after_removal_touch_only_removed_vertices(g, data):
    x = data.draw(st.sets(st.sampled_from(g.vertices))) if g.n else set()
    h = remove_vertices(g, x)
    for comp in connected_components(h):
        assert set(neighborhood(g, comp)) <= x


def test_connected_set_examples(triangle):
    assert enumerate_connected_sets(triangle, 2) == [(0, 1), (0, 2), (1, 2)]
    assert enumerate_connected_sets(path_graph(3), 3) == [(0, 1, 2)]
    # centre 0 with leaves 1, 2, 3: every 3-set containing the centre
    assert enumerate_connected_sets(star_graph(3), 3) == [(0, 1, 2), (0, 1, 3), (0, 2, 3)]
    assert enumerate_connected_sets(path_graph(3), 4) == []
    with pytest.raises(ValueError):
        enumerate_connected_sets(path_graph(3), 0)


def _brute_connected_sets(g, size):
    return [c for c in combinations(g.vertices, size) if connected_components(g.induced_subgraph(c)) == [c]]


def test_star_three_sets_match_subset_filter():
    g = star_graph(3)
    assert enumerate_connected_sets(g, 3) == _brute_connected_sets(g, 3)


@given(graphs(max_n=12), st.integers(1, 6))
def test_enumeration_matches_subset_filter(g, size):
    expected = connected_sets_by_filter(g, size)
    assert enumerate_connected_sets(g, size) == expected
    emitted = list(iter_connected_sets(g, size))
    assert len(emitted) == len(set(emitted))


def test_enumeration_on_sparse_vertex_ids():
    g = remove_vertices(complete_graph(6), [0, 3])
    assert enumerate_connected_sets(g, 3) == [(1, 2, 4), (1, 2, 5), (1, 4, 5), (2, 4, 5)]
