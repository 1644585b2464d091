import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from tieplex import (
    InvalidParameter,
    LayerParams,
    NotStronglyConnected,
    PathStats,
    degree_assortativity,
    directed_degree_assortativity,
    generate_synthetic,
    induced_edge_count,
    largest_scc,
    layer_summary,
    path_stats,
    strongly_connected_components,
    structural_equivalence,
    wedge_closure,
)

from conftest import single, two_layer


def test_scc_three_cycle(three_cycle):
    comps = strongly_connected_components(three_cycle)
    assert comps == [frozenset({0, 1, 2})]
    assert induced_edge_count(three_cycle, comps[0]) == 3


def test_scc_transitive_triplet(transitive_triplet):
    comps = strongly_connected_components(transitive_triplet)
    assert comps == [frozenset({0}), frozenset({1}), frozenset({2})]


def test_scc_matches_reachability_oracle():
    for seed in range(30):
        n = 5 + (seed * 3) % 46
        p = 0.02 + (seed % 5) * 0.03
        g, _ = generate_synthetic(seed, n, [LayerParams("L", p, 0.3)])
        v = g.view("L")
        ours = set(strongly_connected_components(v))
        assert ours == oracles.scc_partition(oracles.view_matrix(v))


def test_path_stats(three_cycle, mutual_dyad):
    assert path_stats(three_cycle, {0, 1, 2}) == PathStats(1.5, 2)
    assert path_stats(mutual_dyad, {0, 1}) == PathStats(1.0, 1)
    assert path_stats(three_cycle, {0}) == PathStats(0.0, 0)


def test_path_stats_unreachable(transitive_triplet):
    with pytest.raises(NotStronglyConnected):
        path_stats(transitive_triplet, {0, 1, 2})


def test_assortativity_star():
    # directed star, undirected projection is K_{1,3}
    v = single([(0, 1), (0, 2), (0, 3)], 4)
    assert degree_assortativity(v) == pytest.approx(-1.0)


def test_assortativity_degenerate_cycle(three_cycle):
    assert math.isnan(degree_assortativity(three_cycle))
    assert math.isnan(degree_assortativity(single([], 3)))


def test_assortativity_matches_sum_formula_oracle():
    for seed in range(20):
        n = 6 + seed % 12
        g, _ = generate_synthetic(seed + 100, n, [LayerParams("L", 0.25, 0.4)])
        v = g.view("L")
        und = [v.undirected_neighbors(i) for i in range(n)]
        deg = [len(s) for s in und]
        pairs = [(deg[i], deg[j]) for i in range(n) for j in und[i] if j > i]
        if not pairs:
            assert math.isnan(degree_assortativity(v))
            continue
        expected = oracles.assortativity_sums(pairs)
        got = degree_assortativity(v)
        if math.isnan(expected):
            assert math.isnan(got)
        else:
            assert got == pytest.approx(expected, abs=1e-9)


def test_directed_assortativity_modes():
    v = single([(0, 1), (0, 2), (0, 3), (1, 2)], 4)
    for a in ("out", "in"):
        for b in ("out", "in"):
            value = directed_degree_assortativity(v, a, b)
            assert math.isnan(value) or -1.0 <= value <= 1.0
    with pytest.raises(InvalidParameter):
        directed_degree_assortativity(v, "sideways", "in")


def test_structural_equivalence_dyad(mutual_dyad):
    classes = structural_equivalence(mutual_dyad, 0.0)
    assert len(classes) == 1
    assert classes[0].members == (0, 1)


def test_structural_equivalence_tolerance_zero_distinct():
    # metric triples all differ: each node is its own class
    v = single([(0, 1), (1, 0), (1, 2), (2, 0)], 3)
    triples = {
        (c.reciprocity, c.cycle_closure, c.triplet_closure)
        for c in structural_equivalence(v, 0.0)
    }
    if len(triples) == 3:
        assert all(len(c.members) == 1 for c in structural_equivalence(v, 0.0))


def test_structural_equivalence_tolerance_merges():
    # two symmetric mutual dyads plus an asymmetric tail on one side
    # gives nearby but unequal triples for nodes 0 and 2
    v = single([(0, 1), (1, 0), (2, 3), (3, 2), (2, 4)], 5)
    tight = structural_equivalence(v, 0.0)
    loose = structural_equivalence(v, 0.5)
    assert len(loose) < len(tight)
    for cls in loose:
        assert cls.tolerance == 0.5


def test_structural_equivalence_pairwise_within_tolerance():
    g, _ = generate_synthetic(5, 14, [LayerParams("L", 0.3, 0.5)])
    v = g.view("L")
    from tieplex import layer_metrics

    actors = {a.node: a for a in layer_metrics(v).actors}
    for cls in structural_equivalence(v, 0.1):
        for m1 in cls.members:
            for m2 in cls.members:
                a, b = actors[m1], actors[m2]
                assert abs(a.reciprocity - b.reciprocity) <= 0.1
                assert abs(a.cycle_closure - b.cycle_closure) <= 0.1
                assert abs(a.triplet_closure - b.triplet_closure) <= 0.1


def test_structural_equivalence_degree_filter():
    v = single([(0, 1), (1, 0), (2, 3)], 4)
    classes = structural_equivalence(v, 0.0, out_degree=1, in_degree=1)
    members = {m for c in classes for m in c.members}
    assert members == {0, 1}


def test_structural_equivalence_relabel_invariant():
    edges = [(0, 1), (1, 0), (1, 2), (2, 3), (3, 1), (0, 3)]
    v1 = single(edges, 4)
    perm = {0: 3, 1: 0, 2: 2, 3: 1}
    v2 = single([(perm[i], perm[j]) for i, j in edges], 4)
    c1 = {frozenset(perm[m] for m in c.members) for c in structural_equivalence(v1, 0.0)}
    c2 = {frozenset(c.members) for c in structural_equivalence(v2, 0.0)}
    assert c1 == c2


def test_wedge_single_closed():
    g = two_layer([(0, 1), (1, 2)], [(0, 2)], 3)
    report = wedge_closure(g, "a", ["a", "b"])
    assert report.total == 1
    assert report.pct["a"] == 0.0
    assert report.pct["b"] == 100.0
    assert report.pct["any"] == 100.0
    assert not report.no_wedges


def test_wedge_none_closed():
    g = two_layer([(0, 1), (0, 2), (0, 3)], [], 4)
    report = wedge_closure(g, "a", ["b"])
    assert report.total == 3  # star center has C(3,2) wedges
    assert report.closed["b"] == 0
    assert report.pct["any"] == 0.0


def test_wedge_empty_layer_flag():
    g = two_layer([], [], 3)
    report = wedge_closure(g, "a", ["b"])
    assert report.total == 0
    assert report.no_wedges
    assert report.pct["any"] == 0.0


def test_wedge_matches_brute_force_and_union():
    for seed in range(25):
        g, _ = generate_synthetic(
            seed + 300, 10,
            [LayerParams("a", 0.2, 0.3), LayerParams("b", 0.15, 0.2)],
        )
        xa = oracles.view_matrix(g.view("a"))
        xb = oracles.view_matrix(g.view("b"))
        report = wedge_closure(g, "a", ["a", "b"])
        total, closed = oracles.wedge_counts(xa, {"a": xa, "b": xb})
        assert report.total == total
        assert report.closed == closed


def test_layer_summary_three_cycle(three_cycle):
    s = layer_summary(three_cycle)
    assert (s.n_nodes, s.n_edges) == (3, 3)
    assert s.avg_total_degree == 1.0
    assert (s.scc_nodes, s.scc_edges) == (3, 3)
    assert (s.avg_path, s.diameter) == (1.5, 2)


def test_layer_summary_empty():
    s = layer_summary(single([], 5))
    assert s.n_edges == 0
    assert s.scc_nodes == 1
    assert (s.avg_path, s.diameter) == (0.0, 0)
    assert math.isnan(s.assortativity)


def test_layer_summary_degree_convention():
    for seed in range(8):
        g, _ = generate_synthetic(seed + 500, 9, [LayerParams("L", 0.3, 0.5)])
        v = g.view("L")
        assert layer_summary(v).avg_total_degree == v.n_edges / v.n_nodes


def test_largest_scc_tie_break():
    # two 2-cycles: the one containing node 0 wins the tie
    v = single([(0, 1), (1, 0), (2, 3), (3, 2)], 4)
    assert largest_scc(v) == {0, 1}


scc_edges = st.lists(
    st.tuples(st.integers(0, 11), st.integers(0, 11)).filter(lambda e: e[0] != e[1]),
    max_size=40,
)


@given(scc_edges)
@settings(max_examples=60)
def test_scc_partition_properties(edges):
    v = single(edges, 12)
    comps = strongly_connected_components(v)
    seen = [m for c in comps for m in c]
    assert sorted(seen) == list(range(12))  # disjoint cover
    giant = largest_scc(v)
    if len(giant) >= 2:
        stats = path_stats(v, giant)
        assert 1.0 <= stats.avg_path <= stats.diameter <= len(giant) - 1
