"""Maximum edge counts, predictions, stationarity, classification, census."""

import pytest
from hypothesis import given, settings

from lambdacol import (
    CapExceededError,
    Case,
    Colouring,
    Graph,
    PartitionShape,
    brute_force_graph_census,
    build_stationary,
    classify,
    dual_shape,
    edge_bound,
    is_lambda_colouring,
    is_stationary,
    lambda_number,
    max_edges,
    partition_of,
    predicted_shapes,
    shape_of,
    spread,
    valid_shapes,
    verify_classification,
)
from lambdacol.extremal import _sporadic_shape, _valid_shape_rows
from test_shapes import small_valid_shapes


def S(*sizes):
    return PartitionShape(sizes)


# ---------------------------------------------------------------------------
# the maximum and its attaining set (frozen values)
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n,t,want", [
    (4, 3, 3), (5, 3, 3), (6, 3, 4), (7, 3, 5), (8, 3, 6), (9, 3, 6),
    (5, 4, 6), (6, 4, 6), (7, 4, 7), (8, 4, 9), (9, 4, 10), (13, 4, 15),
    (6, 5, 10), (12, 5, 20),
])
def test_max_edges_frozen_values(n, t, want):
    value, _ = max_edges(n, t)
    assert value == want


def test_max_edges_attaining_sets_frozen():
    _, am = max_edges(4, 3)
    assert am == {S(1, 1, 1, 1)}
    _, am = max_edges(8, 3)
    assert am == {S(2, 2, 2, 2)}
    _, am = max_edges(8, 4)
    assert am == {S(2, 1, 2, 1, 2)}
    _, am = max_edges(9, 3)
    assert len(am) == 10
    assert S(3, 2, 1, 3) in am and S(3, 1, 2, 3) in am
    assert S(3, 2, 2, 2) in am
    _, am = max_edges(6, 4)
    assert S(2, 0, 2, 0, 2) in am and len(am) == 6


def test_max_edges_maximises_over_valid_shapes():
    for n, t in [(6, 3), (9, 3), (8, 4), (10, 4)]:
        value, am = max_edges(n, t)
        everything = list(valid_shapes(n, t))
        assert value == max(edge_bound(s) for s in everything)
        assert am == frozenset(
            s for s in everything if edge_bound(s) == value
        )


def test_max_edges_range_and_cap():
    with pytest.raises(ValueError):
        max_edges(3, 3)
    with pytest.raises(ValueError):
        max_edges(5, 2)
    with pytest.raises(CapExceededError):
        max_edges(30, 7, max_shapes=1000)


@pytest.mark.parametrize("n,t", [(6, 3), (9, 3), (7, 4), (10, 4), (8, 5)])
def test_vectorised_rows_agree_with_generator(n, t):
    rows = {tuple(int(x) for x in r) for r in _valid_shape_rows(n, t)}
    assert rows == {s.sizes for s in valid_shapes(n, t)}


# ---------------------------------------------------------------------------
# predictions
# ---------------------------------------------------------------------------

def test_predicted_divisible_is_the_equal_shape():
    assert predicted_shapes(8, 3) == {S(2, 2, 2, 2)}
    assert predicted_shapes(10, 4) == {S(2, 2, 2, 2, 2)}
    assert predicted_shapes(12, 5) == {S(2, 2, 2, 2, 2, 2)}


def test_predicted_9_3_full_set():
    # four equitable min-K shapes and six sporadic ones
    want = {
        S(3, 2, 2, 2), S(2, 3, 2, 2), S(2, 2, 3, 2), S(2, 2, 2, 3),
        S(3, 2, 1, 3), S(3, 1, 2, 3),  # type a and its reversal
        S(2, 3, 1, 3), S(3, 1, 3, 2),  # type b and its reversal
        S(3, 0, 3, 3), S(3, 3, 0, 3),  # type d and its reversal
    }
    assert predicted_shapes(9, 3) == want


def test_predicted_5_3_full_set():
    want = {
        S(2, 1, 1, 1), S(1, 2, 1, 1), S(1, 1, 2, 1), S(1, 1, 1, 2),
        S(2, 1, 0, 2), S(2, 0, 1, 2),  # type a and its reversal
        S(1, 2, 0, 2), S(2, 0, 2, 1),  # type b and its reversal
    }
    assert predicted_shapes(5, 3) == want


def test_sporadic_patterns_respect_residues():
    # type c exists only when n = 4k - 2
    assert _sporadic_shape(3, "c", 6) == S(2, 0, 2, 2)
    assert _sporadic_shape(3, "c", 7) is None
    assert _sporadic_shape(3, "d", 9) == S(3, 0, 3, 3)
    assert _sporadic_shape(3, "d", 5) is None  # (1,-2,..) out of range
    assert _sporadic_shape(4, "f", 12) == S(3, 1, 3, 2, 3)
    assert _sporadic_shape(4, "g", 11) == S(3, 1, 3, 1, 3)
    assert _sporadic_shape(4, "h", 13) == S(3, 3, 1, 3, 3)
    assert _sporadic_shape(5, "c", 10) is None  # no sporadic families


def test_h_is_never_predicted():
    for n in range(5, 40):
        for s in predicted_shapes(n, 4):
            k = max(s.sizes)
            assert s.sizes != (k, k, k - 2, k, k)


@pytest.mark.parametrize("t", [3, 4, 5, 6])
def test_predicted_equals_attaining(t):
    for n in range(t + 1, 28):
        value, am = max_edges(n, t)
        assert am == predicted_shapes(n, t), (n, t)


# ---------------------------------------------------------------------------
# stationary graphs
# ---------------------------------------------------------------------------

@given(small_valid_shapes())
@settings(max_examples=120, deadline=None)
def test_build_stationary_canonical(s):
    g, part = build_stationary(s)
    assert g.m == edge_bound(s)
    assert shape_of(part) == s


def test_build_stationary_custom_matchings():
    s = S(2, 1, 2, 2)
    g, part = build_stationary(s, matchings={(0, 2): (1, 0)})
    canonical, _ = build_stationary(s)
    assert g != canonical
    assert g.m == edge_bound(s)
    ok, st = is_stationary(g, part)
    assert ok and st.tag == "EQUITABLE"


def test_build_stationary_rejects_bad_inputs():
    with pytest.raises(ValueError):
        build_stationary(S(0, 1, 1, 1))
    with pytest.raises(ValueError):
        build_stationary(S(2, 1, 2, 2), matchings={(0, 2): (0, 0)})
    with pytest.raises(ValueError):
        build_stationary(S(2, 1, 2, 2), matchings={(0, 2): (0, 1, 2)})


def test_is_stationary_tags():
    cases = [
        (S(2, 2, 2, 2), "EQUITABLE", False),
        (S(3, 2, 1, 3), "a", False),
        (S(3, 1, 2, 3), "a", True),
        (S(2, 3, 1, 3), "b", False),
        (S(3, 1, 3, 2), "b", True),
        (S(2, 0, 2, 2), "c", False),
        (S(2, 2, 0, 2), "c", True),
        (S(3, 0, 3, 3), "d", False),
        (S(3, 2, 3, 1, 3), "f", True),
        (S(2, 0, 2, 0, 2), "g", False),
        (S(3, 3, 1, 3, 3), "h", False),
    ]
    for shape, tag, flag in cases:
        g, part = build_stationary(shape)
        ok, st = is_stationary(g, part)
        assert ok, shape
        assert (st.tag, st.dual_flag) == (tag, flag), shape


def test_is_stationary_rejects_unmatched_spread():
    # valid shape, spread 2, but no sporadic letter fits
    g, part = build_stationary(S(3, 1, 1, 3))
    ok, st = is_stationary(g, part)
    assert not ok and st is None


def test_is_stationary_detects_edge_tampering():
    g, part = build_stationary(S(2, 2, 2, 2))
    v0 = sorted(part.classes[0])
    v1 = sorted(part.classes[1])
    # intra-class edge
    bad = Graph(g.n, g.edges | {(v0[0], v0[1])})
    assert is_stationary(bad, part) == (False, None)
    # adjacent-class edge
    e = (min(v0[0], v1[0]), max(v0[0], v1[0]))
    bad = Graph(g.n, g.edges | {e})
    assert is_stationary(bad, part) == (False, None)
    # broken matching (smaller side no longer saturated)
    some = next(iter(g.edges))
    bad = Graph(g.n, g.edges - {some})
    assert is_stationary(bad, part) == (False, None)


def test_is_stationary_rejects_double_partner():
    # classes {0},{1},{2,3},{4}: vertex 0 gets two partners in class 2,
    # while every class-gap stays noncontiguous
    from lambdacol import ColouredPartition
    part = ColouredPartition(3, (
        frozenset({0}), frozenset({1}), frozenset({2, 3}), frozenset({4}),
    ))
    g = Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 4)])
    assert is_stationary(g, part) == (False, None)


def test_is_stationary_requires_cover():
    g, part = build_stationary(S(1, 1, 1, 1))
    with pytest.raises(ValueError):
        is_stationary(Graph(5, g.edges), part)


# ---------------------------------------------------------------------------
# classification of concrete graphs
# ---------------------------------------------------------------------------

def test_classify_divisible():
    g, _ = build_stationary(S(1, 1, 1, 1))
    rep = classify(g)
    assert rep.case == Case.DIVISIBLE
    assert rep.max_edges == 3
    assert rep.stationary.tag == "EQUITABLE"


def test_classify_equitable():
    # the 4-clique complement construction plus an isolated vertex
    from lambdacol import path_complement
    g3 = path_complement(3)
    rep = classify(Graph(5, g3.edges))
    assert rep.case == Case.EQUITABLE_MIN_K
    assert rep.witness_shape == S(2, 1, 1, 1)
    assert rep.max_edges == 3


def test_classify_sporadic():
    g, _ = build_stationary(S(2, 0, 2, 2))
    rep = classify(g)
    assert rep.case == Case.SPORADIC
    assert rep.witness_shape == S(2, 0, 2, 2)
    assert rep.stationary.tag == "c"


def test_classify_witness_shape_can_differ_from_construction():
    # the type-a graph also admits an equitable optimal partition, and the
    # deterministic lexicographic witness finds that one first
    g, _ = build_stationary(S(3, 2, 1, 3))
    rep = classify(g)
    assert rep.case == Case.EQUITABLE_MIN_K
    assert rep.witness_shape == S(3, 2, 2, 2)
    assert rep.max_edges == 6


def test_classify_not_maximal():
    rep = classify(Graph.from_edges(4, [(0, 1), (1, 2)]))
    assert rep.case == Case.NOT_MAXIMAL
    assert rep.max_edges == 3
    assert rep.stationary is None


def test_classify_rejects_out_of_scope_graphs():
    with pytest.raises(ValueError):
        classify(Graph.from_edges(2, [(0, 1)]))  # span 2
    k4 = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    with pytest.raises(ValueError):
        classify(k4)  # span 6 needs n >= 7


@given(small_valid_shapes())
@settings(max_examples=30, deadline=None)
def test_classify_stationary_graphs_of_attaining_shapes(s):
    if s.n > 12:
        return
    value, am = max_edges(s.n, s.t)
    g, _ = build_stationary(s)
    rep = classify(g)
    if s in am:
        assert rep.case != Case.NOT_MAXIMAL
        assert rep.witness_shape in am
    else:
        assert rep.case == Case.NOT_MAXIMAL


# ---------------------------------------------------------------------------
# the census and verification
# ---------------------------------------------------------------------------

def test_census_frozen_4():
    assert brute_force_graph_census(4) == {0: 0, 2: 2, 3: 3, 4: 4, 5: 5, 6: 6}


def test_census_frozen_5():
    assert brute_force_graph_census(5) == {
        0: 0, 2: 2, 3: 3, 4: 6, 5: 7, 6: 8, 7: 9, 8: 10,
    }


def test_census_frozen_6():
    assert brute_force_graph_census(6) == {
        0: 0, 2: 3, 3: 4, 4: 6, 5: 10,
        6: 11, 7: 12, 8: 13, 9: 14, 10: 15,
    }


def test_census_cap():
    with pytest.raises(CapExceededError):
        brute_force_graph_census(8)


def test_census_never_reports_span_one():
    for n in (2, 3, 4, 5):
        assert 1 not in brute_force_graph_census(n)


def test_verify_frozen_9_3():
    rep = verify_classification(9, 3)
    assert rep.passed
    assert rep.max_edges == 6 and rep.attaining == 10
    assert rep.argmax_equals_predicted
    assert rep.census_ok is None and rep.equitable_only_ok is None
    assert rep.inner_ok is False  # (3,2,1,3) has a class below floor(9/4)
    assert rep.outer_ok is True
    assert rep.line() == (
        "n=9 t=3 PASS max=6 attaining=10 census=skip inner=FAIL outer=PASS"
    )


def test_verify_with_census():
    rep = verify_classification(5, 3)
    assert rep.passed and rep.census_ok is True
    assert rep.line() == (
        "n=5 t=3 PASS max=3 attaining=8 census=PASS inner=PASS outer=PASS"
    )


def test_verify_equitable_only_for_large_spans():
    rep = verify_classification(12, 5)
    assert rep.equitable_only_ok is True and rep.passed
