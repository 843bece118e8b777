from hypothesis import given, strategies as st

from oracles import graphs

from p5color.graph import (
    Graph,
    complete_graph,
    connected_components,
    cycle_graph,
    induced_subgraph,
    is_clique,
    is_p3,
    mask_of,
)


def test_induced_consecutive_cycle_vertices_give_path():
    sub = induced_subgraph(cycle_graph(5), {0, 1, 2})
    assert sub.edges() == [(0, 1), (1, 2)]
    assert sub.labels == (0, 1, 2)


def test_induced_nonadjacent_pair_is_edgeless():
    sub = induced_subgraph(cycle_graph(5), {0, 2})
    assert sub.n == 2 and sub.m == 0
    assert sub.labels == (0, 2)


def test_induced_on_everything_is_identity():
    g = cycle_graph(5)
    assert induced_subgraph(g, range(5)) == g


def test_components():
    assert connected_components(cycle_graph(5)) == [frozenset(range(5))]
    assert connected_components(Graph(3, [])) == [frozenset({0}), frozenset({1}), frozenset({2})]
    g = Graph(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
    assert connected_components(g) == [frozenset({0, 1, 2}), frozenset({3, 4})]


def test_clique_and_p3_predicates():
    assert is_clique(complete_graph(3), {0, 1, 2})
    c5 = cycle_graph(5)
    assert is_p3(c5, {0, 1, 2}) and not is_clique(c5, {0, 1, 2})
    assert is_clique(c5, {3})
    assert not is_p3(complete_graph(3), {0, 1, 2})


def test_rejects_loops_and_bad_vertices():
    import pytest

    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


@given(graphs(), st.data())
def test_induced_subgraph_keeps_exactly_the_inner_edges(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0))) if g.n else st.just(set()))
    sub = induced_subgraph(g, s)
    expected = {(u, v) for u, v in g.edges() if u in s and v in s}
    relabelled = {(sub.labels[a], sub.labels[b]) for a, b in sub.edges()}
    assert relabelled == expected


@given(graphs())
def test_adjacency_is_symmetric_and_components_partition(g):
    for u in range(g.n):
        for v in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)
    comps = connected_components(g)
    assert sum(len(c) for c in comps) == g.n
    assert mask_of(v for c in comps for v in c) == g.all_mask
    for c in comps:
        for u, v in g.edges():
            assert (u in c) == (v in c)
