import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumconn.graphs import (
    DuplicateEdgeError,
    SelfLoopError,
    SizeLimitError,
    NotUnicyclicError,
    VertexRangeError,
    cycle_graph,
    graph_from_edges,
    is_connected,
    is_tree,
    is_unicyclic,
    max_degree,
    path_graph,
    star_graph,
    unique_cycle,
)
from sumconn.construct import attach_path, tree_extremal, unicyclic_extremal


def test_graph_from_edges_basic():
    p3 = graph_from_edges(3, [(0, 1), (1, 2)])
    assert p3.edges == ((0, 1), (1, 2))
    assert p3.adjacency == ((1,), (0, 2), (1,))
    c3 = graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert c3.m == 3
    assert c3.degrees() == (2, 2, 2)


def test_graph_from_edges_validation():
    with pytest.raises(DuplicateEdgeError):
        graph_from_edges(4, [(0, 1), (0, 1)])
    with pytest.raises(DuplicateEdgeError):
        graph_from_edges(4, [(0, 1), (1, 0)])
    with pytest.raises(SelfLoopError):
        graph_from_edges(4, [(2, 2)])
    with pytest.raises(VertexRangeError):
        graph_from_edges(3, [(0, 3)])
    with pytest.raises(SizeLimitError):
        graph_from_edges(17, [])


def test_tree_and_unicyclic_predicates():
    assert is_tree(path_graph(4))
    assert not is_tree(cycle_graph(4))
    assert not is_tree(graph_from_edges(4, [(0, 1), (2, 3)]))  # disconnected
    assert is_unicyclic(cycle_graph(5))
    assert not is_unicyclic(path_graph(5))
    assert is_unicyclic(unicyclic_extremal(4, 3))
    # disconnected with m == n is not unicyclic
    assert not is_unicyclic(graph_from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))


def test_trees_and_unicyclic_mutually_exclusive():
    for g in (path_graph(5), cycle_graph(5), star_graph(6), unicyclic_extremal(6, 4)):
        assert is_tree(g) != is_unicyclic(g) or not is_connected(g)


def test_unique_cycle():
    assert unique_cycle(cycle_graph(4)) == (0, 1, 2, 3)
    assert set(unique_cycle(unicyclic_extremal(4, 3))) == {0, 1, 2}
    assert set(unique_cycle(unicyclic_extremal(7, 5))) == {0, 1, 2}
    with pytest.raises(NotUnicyclicError):
        unique_cycle(path_graph(4))


def _peel_oracle(g):
    # independent peeling: repeatedly drop degree-one vertices
    alive = set(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in list(alive):
            if sum(1 for w in g.adjacency[v] if w in alive) == 1:
                alive.discard(v)
                changed = True
    return alive


def test_unique_cycle_against_peel_oracle():
    for g in (
        unicyclic_extremal(7, 5),
        unicyclic_extremal(9, 6),
        attach_path(cycle_graph(5), 0, 2),
        attach_path(attach_path(cycle_graph(4), 2, 3), 1, 1),
    ):
        assert set(unique_cycle(g)) == _peel_oracle(g)


def test_max_degree():
    for n in (3, 7, 12):
        assert max_degree(path_graph(n)) == 2
    assert max_degree(star_graph(8)) == 7
    assert max_degree(tree_extremal(7, 4)) == 4
    assert max_degree(graph_from_edges(1, [])) == 0


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_degree_sum_is_twice_edge_count(data):
    n = data.draw(st.integers(min_value=1, max_value=10))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    g = graph_from_edges(n, edges)
    assert sum(g.degrees()) == 2 * g.m


def test_graph_is_value_like():
    a = graph_from_edges(3, [(1, 2), (0, 1)])
    b = graph_from_edges(3, [(0, 1), (1, 2)])
    assert a == b
    assert hash(a) == hash(b)
    assert {a, b} == {a}
