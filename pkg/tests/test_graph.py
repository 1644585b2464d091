
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tieplex import (
    DuplicateLayerName,
    DuplicateNodeLabel,
    LayerSpec,
    SelfTie,
    UnknownLayer,
    UnknownNode,
    build_graph,
    layer_view,
)

from conftest import single


def simple_graph():
    specs = [LayerSpec.basic("alpha"), LayerSpec.basic("beta"), LayerSpec.aggregate("all", "alpha", "beta")]
    edges = [("a", "b", "alpha"), ("b", "a", "alpha"), ("a", "c", "beta")]
    return build_graph(["a", "b", "c"], specs, edges)


def test_aggregate_is_union():
    g = simple_graph()
    assert g.edge_set("all") == {(0, 1), (1, 0), (0, 2)}


def test_self_tie_rejected():
    with pytest.raises(SelfTie):
        build_graph(["a"], [LayerSpec.basic("alpha")], [("a", "a", "alpha")])


def test_four_basic_five_aggregates_gives_nine_views():
    basics = ["strong_off", "weak_off", "strong_on", "weak_on"]
    specs = [LayerSpec.basic(b) for b in basics] + [
        LayerSpec.aggregate("off", "strong_off", "weak_off"),
        LayerSpec.aggregate("on", "strong_on", "weak_on"),
        LayerSpec.aggregate("strong", "strong_off", "strong_on"),
        LayerSpec.aggregate("weak", "weak_off", "weak_on"),
        LayerSpec.aggregate("all", *basics),
    ]
    g = build_graph(["a", "b", "c"], specs, [("a", "b", "strong_off")])
    assert len(g.layer_names) == 9
    for name in g.layer_names:
        assert g.view(name).n_nodes == 3


def test_layer_view_contents():
    g = simple_graph()
    v = layer_view(g, "alpha")
    assert v.out_set(0) == {1}
    assert v.in_set(0) == {1}
    assert layer_view(g, "all").out_set(0) == {1, 2}


def test_unknown_layer_view():
    g = simple_graph()
    with pytest.raises(UnknownLayer):
        g.view("missing")


def test_out_in_sets():
    v = single([(0, 1), (1, 2), (2, 0)], 3)
    assert v.out_set(0) == {1}
    assert v.in_set(0) == {2}

    v = single([], 2)
    assert v.out_set(0) == frozenset()
    assert v.in_set(0) == frozenset()
    assert v.out_degree(0) == v.in_degree(0) == 0

    v = single([(0, 1), (1, 0), (0, 2)], 3)
    assert v.out_set(0) == {1, 2}
    assert v.in_set(0) == {1}


def test_node_id_errors():
    g = simple_graph()
    with pytest.raises(UnknownNode):
        g.node_id("zzz")
    with pytest.raises(UnknownNode):
        g.view("alpha").out_set(99)


def test_build_errors_identify_record():
    specs = [LayerSpec.basic("alpha")]
    with pytest.raises(UnknownNode, match="'x'"):
        build_graph(["a"], specs, [("x", "a", "alpha")])
    with pytest.raises(UnknownLayer, match="'nope'"):
        build_graph(["a", "b"], specs, [("a", "b", "nope")])
    with pytest.raises(DuplicateLayerName):
        build_graph(["a"], [LayerSpec.basic("alpha"), LayerSpec.basic("alpha")], [])
    with pytest.raises(DuplicateNodeLabel):
        build_graph(["a", "a"], specs, [])


def test_edge_into_aggregate_rejected():
    specs = [LayerSpec.basic("alpha"), LayerSpec.aggregate("agg", "alpha")]
    with pytest.raises(UnknownLayer, match="aggregate"):
        build_graph(["a", "b"], specs, [("a", "b", "agg")])


def test_aggregate_must_reference_declared_basic():
    with pytest.raises(UnknownLayer):
        build_graph(["a"], [LayerSpec.aggregate("agg", "ghost")], [])


def test_single_constituent_aggregate_allowed():
    specs = [LayerSpec.basic("alpha"), LayerSpec.aggregate("copy", "alpha")]
    g = build_graph(["a", "b"], specs, [("a", "b", "alpha")])
    assert g.edge_set("copy") == g.edge_set("alpha")


def test_duplicate_edges_collapse_with_counter():
    specs = [LayerSpec.basic("alpha")]
    g = build_graph(["a", "b"], specs, [("a", "b", "alpha")] * 3)
    assert g.view("alpha").n_edges == 1
    assert g.duplicates_collapsed["alpha"] == 2


edge_lists = st.lists(
    st.tuples(st.integers(0, 7), st.integers(0, 7)).filter(lambda e: e[0] != e[1]),
    max_size=30,
)


@given(edge_lists, edge_lists)
@settings(max_examples=60)
def test_adjacency_invariants(ea, eb):
    labels = [str(k) for k in range(8)]
    specs = [LayerSpec.basic("a"), LayerSpec.basic("b"), LayerSpec.aggregate("u", "a", "b")]
    triples = [(str(i), str(j), "a") for i, j in ea] + [(str(i), str(j), "b") for i, j in eb]
    g = build_graph(labels, specs, triples)
    for name in g.layer_names:
        v = g.view(name)
        assert sum(v.out_degree(i) for i in range(8)) == v.n_edges
        assert sum(v.in_degree(i) for i in range(8)) == v.n_edges
        for i in range(8):
            for j in v.out_set(i):
                assert i in v.in_set(j)
    # out-degree against the raw edge list
    raw_a = {(i, j) for i, j in ea}
    for i in range(8):
        assert g.view("a").out_degree(i) == sum(1 for s, t in raw_a if s == i)
    # union size vs constituent sizes, equality iff disjoint
    na, nb, nu = (g.view(k).n_edges for k in ("a", "b", "u"))
    assert nu <= na + nb
    assert (nu == na + nb) == g.edge_set("a").isdisjoint(g.edge_set("b"))


@given(edge_lists, st.randoms(use_true_random=False))
@settings(max_examples=40)
def test_build_order_insensitive(ea, rnd):
    labels = [str(k) for k in range(8)]
    specs = [LayerSpec.basic("a")]
    triples = [(str(i), str(j), "a") for i, j in ea]
    g1 = build_graph(labels, specs, list(triples))
    shuffled = list(triples)
    rnd.shuffle(shuffled)
    g2 = build_graph(labels, specs, shuffled)
    assert g1 == g2
    for i in range(8):
        assert g1.view("a").out_set(i) == g2.view("a").out_set(i)
