import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from functidim.graphs import (
    UNREACHABLE,
    GraphDomainError,
    GraphInputError,
    all_pairs_distances,
    complement,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    diameter,
    disjoint_union,
    format_graph_text,
    gen_family,
    join,
    make_graph,
    parse_graph_text,
    path_graph,
    wheel_graph,
)
from functidim.harness import random_connected_graph


def test_make_graph_triangle():
    g = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.order == 3 and g.size == 3
    assert g == cycle_graph(3)


def test_make_graph_p2():
    g = make_graph(2, [(0, 1)])
    assert g.edges == ((0, 1),)


def test_make_graph_collapses_duplicates():
    g = make_graph(4, [(0, 1), (1, 0)])
    assert g.order == 4 and g.size == 1
    assert not g.is_connected()


def test_make_graph_rejects_bad_input():
    with pytest.raises(GraphInputError):
        make_graph(3, [(0, 3)])
    with pytest.raises(GraphInputError):
        make_graph(3, [(1, 1)])
    with pytest.raises(GraphInputError):
        make_graph(0, [])


def test_cycle_labeling():
    g = gen_family("cycle", 5)
    assert g.edges == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))


def test_wheel_counts():
    g = gen_family("wheel", 4)
    assert g.order == 5 and g.size == 8
    assert g.degree(4) == 4  # hub is the last index


def test_join_small_family():
    # a single vertex joined to the union of a vertex and an edge
    right = disjoint_union(complete_graph(1), complete_graph(2))
    g = join(complete_graph(1), right)
    assert g.order == 4
    assert g.size == 4
    assert g.degree(0) == 3


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_edge_count(n):
    assert cycle_graph(n).size == n


@pytest.mark.parametrize("n", range(3, 9))
def test_wheel_edge_count(n):
    assert wheel_graph(n).size == 2 * n


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_edge_count(n):
    assert complete_graph(n).size == n * (n - 1) // 2


def test_family_minimums():
    with pytest.raises(GraphInputError):
        cycle_graph(2)
    with pytest.raises(GraphInputError):
        wheel_graph(2)
    with pytest.raises(GraphInputError):
        complete_bipartite_graph(0, 2)
    with pytest.raises(GraphInputError):
        gen_family("no_such_family", 3)
    with pytest.raises(GraphInputError):
        gen_family("cycle", 3, 4)


def test_distances_examples():
    c4 = cycle_graph(4).distances
    assert c4.distance(0, 2) == 2
    assert c4.distance(0, 1) == 1
    k5 = complete_graph(5).distances
    off = k5.dist[~np.eye(5, dtype=bool)]
    assert set(off.tolist()) == {1}
    assert path_graph(4).distances.distance(0, 3) == 3


def test_distance_matrix_is_readonly():
    d = cycle_graph(5).distances
    with pytest.raises(ValueError):
        d.dist[0, 0] = 7


def test_unreachable_sentinel():
    g = disjoint_union(complete_graph(2), complete_graph(2))
    d = all_pairs_distances(g)
    assert d.distance(0, 2) == UNREACHABLE
    assert not d.is_connected()


def test_diameter_examples():
    assert diameter(cycle_graph(6)) == 3
    assert diameter(complete_graph(7)) == 1
    assert diameter(path_graph(5)) == 4


def test_diameter_rejects_disconnected():
    with pytest.raises(GraphDomainError):
        diameter(disjoint_union(path_graph(2), path_graph(2)))


@given(st.integers(2, 12), st.integers(0, 10**6))
def test_distance_matrix_invariants(n, seed):
    g = random_connected_graph(n, random.Random(seed))
    d = g.distances.dist
    assert (d == d.T).all()
    assert (np.diag(d) == 0).all()
    # adjacency shows up exactly as distance one
    ones = {(u, v) for u in range(n) for v in range(n) if u < v and d[u, v] == 1}
    assert ones == set(g.edges)
    for u in range(n):
        for v in range(n):
            for w in range(n):
                assert d[u, w] <= d[u, v] + d[v, w]


@given(st.integers(1, 10), st.integers(0, 10**6))
def test_complement_involution(n, seed):
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
    g = make_graph(n, edges, name="sample")
    assert complement(complement(g)) == g


def test_structural_equality_ignores_name():
    assert cycle_graph(4).renamed("other") == cycle_graph(4)
    assert make_graph(3, [(0, 1)]) != make_graph(3, [(1, 2)])


def test_relabeled():
    g = path_graph(3).relabeled([2, 1, 0])
    assert g == path_graph(3)
    with pytest.raises(GraphInputError):
        path_graph(3).relabeled([0, 0, 1])


def test_text_round_trip():
    g = wheel_graph(5)
    text = format_graph_text(g)
    back = parse_graph_text(text)
    assert back == g
    assert back.name == g.name


def test_text_format_ignores_comments_and_blanks():
    g = parse_graph_text("# a comment\n\n3\n0 1\n# another\n1 2\n")
    assert g == path_graph(3)


def test_text_format_errors():
    with pytest.raises(GraphInputError):
        parse_graph_text("")
    with pytest.raises(GraphInputError):
        parse_graph_text("3\n0 1 2\n")
    with pytest.raises(GraphInputError):
        parse_graph_text("x\n")
