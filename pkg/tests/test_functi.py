import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from functidim.functi import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapError,
    FunctionInputError,
    VertexFunction,
    build_functigraph,
    build_two_clique_bridge,
    classify_function,
    composed_label,
    constant_function,
    enumerate_functions,
    format_function_file,
    identity_function,
    load_function,
    parse_function_literal,
    save_function,
)
from functidim.graphs import GraphInputError, complete_graph, cycle_graph, path_graph
from functidim.harness import random_connected_graph


def test_build_p2_identity_is_4cycle():
    fg = build_functigraph(path_graph(2), identity_function(2))
    g = fg.composed
    assert g.order == 4 and g.size == 4
    assert all(g.degree(v) == 2 for v in range(4))
    assert g.is_connected()


def test_build_k3_constant_counts():
    fg = build_functigraph(complete_graph(3), constant_function(3))
    assert fg.composed.order == 6 and fg.composed.size == 9


def test_build_c4_identity_is_cube():
    fg = build_functigraph(cycle_graph(4), identity_function(4))
    g = fg.composed
    assert g.order == 8 and g.size == 12
    assert all(g.degree(v) == 3 for v in range(8))


def test_build_rejects_order_mismatch():
    with pytest.raises(FunctionInputError):
        build_functigraph(path_graph(3), identity_function(4))


def test_function_validation():
    with pytest.raises(FunctionInputError):
        VertexFunction(3, (0, 1))
    with pytest.raises(FunctionInputError):
        VertexFunction(3, (0, 1, 3))


def test_classify_examples():
    assert classify_function(identity_function(5)).kind == "permutation"
    assert classify_function(identity_function(5)).image_size == 5
    assert classify_function(constant_function(4)).kind == "constant"
    six = VertexFunction(6, (0, 0, 0, 1, 1, 2))
    assert classify_function(six) == type(classify_function(six))("general", 3)


def test_enumerate_counts():
    assert len(list(enumerate_functions(2))) == 4
    assert len(list(enumerate_functions(3, kind="permutation"))) == 6
    # image size 2 on four vertices, against a direct count of all 4^4 maps
    direct = sum(
        1 for m in itertools.product(range(4), repeat=4) if len(set(m)) == 2
    )
    assert direct == 84
    assert len(list(enumerate_functions(4, image_size=2))) == direct


def test_enumerate_is_lexicographic_and_exhaustive():
    maps = [f.image_map for f in enumerate_functions(3)]
    assert maps == sorted(maps)
    assert len(set(maps)) == 27


def test_enumerate_cap():
    with pytest.raises(EnumerationCapError) as err:
        next(enumerate_functions(DEFAULT_ENUMERATION_CAP + 1))
    assert str(DEFAULT_ENUMERATION_CAP) in str(err.value)
    # explicit cap raise is allowed
    stream = enumerate_functions(9, kind="constant", cap=9)
    assert sum(1 for _ in stream) == 9


def test_enumerate_cycle_symmetry_reduction():
    n = 4
    full = [f.image_map for f in enumerate_functions(n)]
    reduced = [f.image_map for f in enumerate_functions(n, reduce_cycle_symmetry=True)]
    # every function is equivalent to exactly one emitted representative,
    # and each representative is the least member of its orbit
    rotations = [tuple((i + r) % n for i in range(n)) for r in range(n)]
    reflections = [tuple((r - i) % n for i in range(n)) for r in range(n)]
    group = rotations + reflections
    seen = set()
    for m in full:
        orbit_min = min(tuple(m[g[i]] for i in range(n)) for g in group)
        seen.add(orbit_min)
    assert sorted(seen) == reduced


def test_two_clique_bridge_counts():
    g = build_two_clique_bridge(3, 3)
    assert g.order == 6 and g.size == 9
    # every first-clique vertex reaches exactly one second-clique vertex
    for v in range(3):
        assert g.neighbors(v) & {3, 4, 5} == {3}
    with pytest.raises(GraphInputError):
        build_two_clique_bridge(2, 4)


@given(st.integers(2, 7), st.integers(0, 10**6))
def test_functigraph_invariants(n, seed):
    rng = random.Random(seed)
    g = random_connected_graph(n, rng)
    f = VertexFunction(n, tuple(rng.randrange(n) for _ in range(n)))
    fg = build_functigraph(g, f)
    composed = fg.composed
    assert composed.order == 2 * n
    assert composed.size == 2 * g.size + n
    for i in range(n):
        top = composed.neighbors(i) & set(range(n, 2 * n))
        assert top == {n + f(i)}
    for j in range(n):
        incoming = {i for i in range(n) if n + j in composed.neighbors(i)}
        assert incoming == set(f.preimage(j))
    assert composed.is_connected()


def test_classification_matches_bijection():
    for f in enumerate_functions(4):
        kind = classify_function(f).kind
        assert (kind == "permutation") == (sorted(f.image_map) == [0, 1, 2, 3])


def test_labels():
    assert composed_label(0, 4) == "u_1"
    assert composed_label(3, 4) == "u_4"
    assert composed_label(4, 4) == "v_1"
    assert composed_label(7, 4) == "v_4"


def test_function_literal_round_trip():
    f = parse_function_literal("1,1,1")
    assert f == constant_function(3)
    assert f.as_one_based() == (1, 1, 1)
    with pytest.raises(FunctionInputError):
        parse_function_literal("1,4,2")
    with pytest.raises(FunctionInputError):
        parse_function_literal("a,b")
    with pytest.raises(FunctionInputError):
        parse_function_literal("1,2", domain_order=3)


def test_function_file_round_trip(tmp_path):
    f = VertexFunction(4, (1, 1, 0, 3))
    path = tmp_path / "f.txt"
    save_function(f, path)
    text = path.read_text()
    assert text.startswith("# kind: general")
    assert load_function(path) == f
    assert load_function(path, domain_order=4) == f


def test_format_function_file_kind_comment():
    assert format_function_file(identity_function(3)).splitlines()[0] == "# kind: permutation"
