import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import triangle
from rainbowpath.builder import (
    APPEND,
    INSERT_AT_J0,
    PREPEND,
    SWAP_LAST,
    AssumptionViolated,
    BuilderState,
    NotGallai,
    build_rainbow_u_path,
    builder_step,
    check_condition_a,
    initial_state,
    select_rainbow_fan,
)
from rainbowpath.generators import gen_gallai_substitution, gen_gk
from rainbowpath.graph import EdgeColoredGraph, InputError, color_degree, validate_path
from rainbowpath.oracle import longest_rainbow_path

# Gallai K_5 whose build from vertex 0 runs through an insert-at-j0 step:
# C(0,1)=5, C(0,2)=2, C(0,3)=3, C(0,4)=1; fan (1, 2, 3, 4).
#   step 1: C(1,2)=2 != C(0,1)=5            -> (2, 1)
#   step 2: C(1,3)=3 != 5, C(2,3)=2 == C(0,2) -> (2, 3, 1)
#   step 3: C(1,4)=1 != 5, C(3,4)=1 != C(0,3)=3; C(0,4)=1,
#           j=2: C(3,4)=1 == 1 and C(2,4)=2 != 1 -> j0=2 -> (2, 4, 3, 1)
K5_J0 = EdgeColoredGraph(
    5,
    [
        (0, 1, 5), (0, 2, 2), (0, 3, 3), (0, 4, 1),
        (1, 2, 2), (1, 3, 3), (1, 4, 1),
        (2, 3, 2), (2, 4, 2), (3, 4, 1),
    ],
)


def test_fan_examples(g2):
    assert select_rainbow_fan(g2, 0) == (1, 2)
    assert [g2.color(0, v) for v in select_rainbow_fan(g2, 0)] == [2, 1]
    assert select_rainbow_fan(triangle(1, 1, 1), 0) == (1,)
    assert select_rainbow_fan(EdgeColoredGraph(2), 0) == ()


def test_first_step_keeps_order_when_colors_match(g2):
    # v1 = 10 (id 2), v2 = 01 (id 1): C(10, 01) = 1 = C(00, 10)
    st = BuilderState(0, (2, 1), (2,), 0)
    assert builder_step(g2, st).w == (2, 1)


def test_first_step_swaps_when_colors_differ(k4_two_colors):
    st = initial_state(k4_two_colors, 0)
    assert st.neighbors == (1, 2)
    nxt = builder_step(k4_two_colors, st)
    assert nxt.w == (2, 1) and nxt.step == 1
    assert check_condition_a(k4_two_colors, 0, nxt.w)


def test_rainbow_triangle_input_is_caught_without_precheck():
    with pytest.raises(AssumptionViolated) as err:
        build_rainbow_u_path(triangle(1, 2, 3), 0, precheck=False)
    assert err.value.witness == (0, 1, 2)


def test_precheck_reports_not_gallai():
    with pytest.raises(NotGallai) as err:
        build_rainbow_u_path(triangle(1, 2, 3), 0)
    assert err.value.witness == (0, 1, 2)
    incomplete = EdgeColoredGraph(3, [(0, 1, 1), (0, 2, 1)])
    with pytest.raises(NotGallai) as err:
        build_rainbow_u_path(incomplete, 0)
    assert err.value.witness == (1, 2)


def test_missing_edge_without_precheck():
    incomplete = EdgeColoredGraph(3, [(0, 1, 1), (0, 2, 2)])
    with pytest.raises(AssumptionViolated) as err:
        build_rainbow_u_path(incomplete, 0, precheck=False)
    assert err.value.witness == (1, 2)


def test_build_examples(g2, g3):
    path, _ = build_rainbow_u_path(triangle(1, 1, 1), 0)
    assert path.vertices == (0, 1) and path.length == 1

    path, _ = build_rainbow_u_path(g2, 0)
    assert path.vertices == (0, 1, 2) and path.colors == (2, 1)

    path, _ = build_rainbow_u_path(g3, 0)
    assert path.length == 3 and set(path.colors) == {1, 2, 3}
    assert longest_rainbow_path(g3, start=0).length == 3


def test_single_vertex_graph():
    path, trace = build_rainbow_u_path(EdgeColoredGraph(1), 0, trace=True)
    assert path.vertices == (0,) and len(trace) == 0


def test_g3_trace(g3):
    # fan of 000: 001 (color 3), 010 (color 2), 100 (color 1)
    path, trace = build_rainbow_u_path(g3, 0, trace=True)
    assert [(r.step, r.case, r.j0, r.w) for r in trace] == [
        (1, SWAP_LAST, None, (2, 1)),
        (2, PREPEND, 1, (4, 2, 1)),
    ]
    assert path.vertices == (0, 1, 2, 4) and path.colors == (3, 2, 1)


def test_insert_at_j0_trace():
    path, trace = build_rainbow_u_path(K5_J0, 0, trace=True)
    assert [(r.case, r.j0, r.w) for r in trace] == [
        (SWAP_LAST, None, (2, 1)),
        (SWAP_LAST, None, (2, 3, 1)),
        (INSERT_AT_J0, 2, (2, 4, 3, 1)),
    ]
    assert path.vertices == (0, 1, 3, 4, 2)
    assert path.colors == (5, 3, 1, 2)


def test_condition_a_examples(g2):
    assert check_condition_a(g2, 0, [3])
    assert check_condition_a(g2, 0, [2, 1])
    assert not check_condition_a(g2, 0, [1, 2])
    with pytest.raises(InputError):
        check_condition_a(EdgeColoredGraph(3, [(0, 1, 1)]), 0, [1, 2])


def test_trace_json_shape(g3):
    _, trace = build_rainbow_u_path(g3, 0, trace=True)
    assert list(trace.records[-1].to_json()) == ["step", "case", "j0", "w"]


def test_out_of_range_anchor(g2):
    with pytest.raises(InputError):
        build_rainbow_u_path(g2, 9)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40), st.integers(0, 2**40))
def test_builder_on_gallai_graphs(n, seed):
    g = gen_gallai_substitution(n, seed)
    for u in range(n):
        k = color_degree(g, u)
        path, trace = build_rainbow_u_path(g, u, trace=True, precheck=False)
        check = validate_path(g, path.vertices)
        assert check.rainbow and path.start == u and path.length == k
        assert len(trace) == max(k - 1, 0)
        for rec in trace:
            assert check_condition_a(g, u, rec.w)
            assert len(rec.w) == rec.step + 1
        if k:
            assert path.colors[0] not in path.colors[1:]
        assert build_rainbow_u_path(g, u)[0] == path


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 9), st.integers(0, 2**40))
def test_oracle_dominates_builder(n, seed):
    g = gen_gallai_substitution(n, seed)
    for u in range(n):
        built, _ = build_rainbow_u_path(g, u)
        assert longest_rainbow_path(g, start=u).length >= built.length


def test_all_cases_exercised():
    seen = set()
    for seed in range(30):
        g = gen_gallai_substitution(16, seed)
        for u in range(g.n):
            _, trace = build_rainbow_u_path(g, u, trace=True, precheck=False)
            seen.update(r.case for r in trace)
    assert seen == {APPEND, SWAP_LAST, PREPEND, INSERT_AT_J0}


@pytest.mark.parametrize("k", range(1, 7))
def test_builder_on_gk(k):
    g = gen_gk(k)
    for u in range(g.n):
        assert build_rainbow_u_path(g, u, precheck=False)[0].length == k
