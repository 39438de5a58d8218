import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from functidim._core import get_backend
from functidim.functi import build_functigraph, constant_function, identity_function
from functidim.graphs import (
    GraphDomainError,
    GraphInputError,
    complete_graph,
    cycle_graph,
    disjoint_union,
    make_graph,
    path_graph,
    wheel_graph,
)
from functidim.harness import random_connected_graph
from functidim.resolve import (
    DimensionResult,
    UnknownResult,
    brute_force_dimension,
    default_budget,
    is_resolving,
    metric_code,
    metric_dimension_exact,
    twin_partition,
)


def compose(base, f):
    return build_functigraph(base, f).composed


def test_metric_code_pentagon():
    d = cycle_graph(5).distances
    assert metric_code(d, (0, 1), 3).entries == (2, 2)


def test_metric_code_own_position():
    d = wheel_graph(5).distances
    code = metric_code(d, (2, 4, 5), 4)
    assert code.entries[1] == 0


def test_metric_code_on_composed_triangle():
    g = compose(cycle_graph(3), constant_function(3))
    code = metric_code(g.distances, (0, 2, 5), 3)
    assert code.entries == (1, 1, 1)


def test_metric_code_range_check():
    d = cycle_graph(4).distances
    with pytest.raises(GraphInputError):
        metric_code(d, (0, 4), 1)


def test_is_resolving_known_sets():
    c4 = compose(cycle_graph(4), constant_function(4))
    assert is_resolving(c4.distances, {0, 1, 5})
    c3 = compose(cycle_graph(3), constant_function(3))
    assert is_resolving(c3.distances, {0, 2, 5})


def test_single_vertex_never_resolves_a_cycle():
    for n in (3, 5, 8):
        d = cycle_graph(n).distances
        for v in range(n):
            check = is_resolving(d, {v})
            assert not check
            u, w = check.unresolved
            assert d.distance(u, v) == d.distance(w, v)


def test_is_resolving_rejects_empty():
    with pytest.raises(GraphInputError):
        is_resolving(cycle_graph(4).distances, set())


def test_twin_partition_complete():
    tp = twin_partition(complete_graph(6))
    assert tp.classes == (frozenset(range(6)),)
    assert tp.forced_lower_bound == 5


def test_twin_partition_composed_complete():
    n = 5
    g = compose(complete_graph(n), constant_function(n))
    tp = twin_partition(g)
    classes = {tuple(sorted(c)) for c in tp.classes}
    assert tuple(range(n)) in classes
    assert tuple(range(n + 1, 2 * n)) in classes
    assert (n,) in classes
    assert tp.forced_lower_bound == 2 * n - 3


def test_twin_partition_cycle_is_trivial():
    tp = twin_partition(cycle_graph(6))
    assert all(len(c) == 1 for c in tp.classes)
    assert tp.forced_lower_bound == 0


@pytest.mark.parametrize(
    "graph,expected",
    [
        (path_graph(7), 1),
        (complete_graph(4), 3),
        (wheel_graph(6), 3),
    ],
)
def test_solver_small_families(graph, expected):
    assert metric_dimension_exact(graph).dimension == expected


def test_solver_composed_examples():
    assert metric_dimension_exact(compose(complete_graph(4), constant_function(4))).dimension == 5
    assert metric_dimension_exact(compose(cycle_graph(5), identity_function(5))).dimension == 2
    assert metric_dimension_exact(compose(cycle_graph(4), identity_function(4))).dimension == 3


def test_solver_trivial_graph():
    result = metric_dimension_exact(make_graph(1, []))
    assert result.dimension == 0 and result.witness == ()


def test_solver_rejects_disconnected_and_oversize():
    with pytest.raises(GraphDomainError):
        metric_dimension_exact(disjoint_union(path_graph(2), path_graph(3)))
    big = path_graph(65)
    with pytest.raises(GraphInputError):
        metric_dimension_exact(big)


def test_budget_exhaustion_returns_bounds():
    g = compose(cycle_graph(9), constant_function(9))
    result = metric_dimension_exact(g, budget=2)
    assert isinstance(result, UnknownResult)
    assert result.lower_bound <= result.upper_bound
    assert is_resolving(g.distances, result.witness)
    full = metric_dimension_exact(g)
    assert isinstance(full, DimensionResult)
    assert result.lower_bound <= full.dimension <= result.upper_bound


def test_solver_deterministic():
    g = compose(cycle_graph(7), constant_function(7))
    a = metric_dimension_exact(g)
    b = metric_dimension_exact(g)
    assert a.dimension == b.dimension and a.witness == b.witness


def test_witness_resolves_and_is_minimal():
    instances = [
        cycle_graph(6),
        complete_graph(4),
        wheel_graph(5),
        compose(complete_graph(3), constant_function(3)),
        compose(cycle_graph(5), constant_function(5)),
    ]
    for g in instances:
        result = metric_dimension_exact(g)
        assert is_resolving(g.distances, result.witness)
        assert len(result.witness) == result.dimension
        for v in result.witness:
            rest = set(result.witness) - {v}
            if rest:
                assert not is_resolving(g.distances, rest)


def test_solver_at_least_twin_bound():
    for n in range(3, 7):
        g = compose(complete_graph(n), constant_function(n))
        assert metric_dimension_exact(g).dimension >= twin_partition(g).forced_lower_bound


@settings(deadline=None)
@given(st.integers(2, 7), st.integers(0, 10**6))
def test_solver_matches_oracle(n, seed):
    g = random_connected_graph(n, random.Random(seed))
    assert metric_dimension_exact(g).dimension == brute_force_dimension(g).dimension


def test_solver_matches_oracle_up_to_order_ten():
    from functidim.functi import build_two_clique_bridge
    from functidim.graphs import complete_bipartite_graph

    rng = random.Random(31)
    instances = [
        cycle_graph(9),
        cycle_graph(10),
        wheel_graph(8),
        complete_bipartite_graph(3, 6),
        build_two_clique_bridge(4, 5),
        compose(cycle_graph(5), constant_function(5)),
    ]
    instances += [random_connected_graph(rng.randint(9, 10), rng) for _ in range(6)]
    for g in instances:
        assert metric_dimension_exact(g).dimension == brute_force_dimension(g).dimension


@settings(deadline=None)
@given(st.integers(3, 8), st.integers(0, 10**6))
def test_adding_vertices_preserves_resolving(n, seed):
    rng = random.Random(seed)
    g = random_connected_graph(n, rng)
    base = metric_dimension_exact(g).witness
    extra = set(base) | {rng.randrange(n)}
    assert is_resolving(g.distances, extra)


def test_backend_parity():
    try:
        compiled = get_backend("cython")
    except ImportError:
        pytest.skip("compiled backend not built")
    pure = get_backend("pure")
    rng = random.Random(5)
    for _ in range(40):
        g = random_connected_graph(rng.randint(2, 10), rng)
        dist = g.distances.dist
        forced = np.asarray(
            sorted(v for c in twin_partition(g).classes for v in sorted(c)[1:]),
            dtype=np.int32,
        )
        assert pure.min_cover_search(dist, forced, 10**7) == compiled.min_cover_search(
            dist, forced, 10**7
        )


def test_default_budget_env_override(monkeypatch):
    monkeypatch.delenv("FUNCTIDIM_BUDGET", raising=False)
    assert default_budget() == 10_000_000
    monkeypatch.setenv("FUNCTIDIM_BUDGET", "1234")
    assert default_budget() == 1234
    monkeypatch.setenv("FUNCTIDIM_BUDGET", "zero")
    with pytest.raises(ValueError):
        default_budget()
    monkeypatch.setenv("FUNCTIDIM_BUDGET", "-3")
    with pytest.raises(ValueError):
        default_budget()
