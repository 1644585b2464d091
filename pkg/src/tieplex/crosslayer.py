"""Cross-layer actor metrics and attribute similarity.

The single-layer metrics generalize to an ordered layer pair (alpha,
beta) by taking the anchor neighbor set from alpha and the compared
sets from beta.  The weighting ties and normalizing degree follow the
compared side: cycle closure walks beta's in-ties, triplet closure
walks alpha's out-ties.  This is the unique attribution under which
alpha == beta collapses exactly to the single-layer formulas, and it is
echoed in report metadata (``cycle_closure_reference_layer`` /
``triplet_closure_reference_layer``).

Overlapping indexes compare the same kind of neighbor set across the
two layers: the out variant reads as consistency of tie-making
(activity), the in variant as consistency of being chosen (popularity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graph import MultiplexGraph
from .metrics import _mean, _mean_jaccard, jaccard


@dataclass(frozen=True)
class CrossLayerMetrics:
    """Per-actor record for one ordered layer pair."""

    node: int
    alpha: str
    beta: str
    reciprocity: float
    cycle_closure: float
    triplet_closure: float
    overlap_out: float
    overlap_in: float


@dataclass(frozen=True)
class CrossLayerAverages:
    alpha: str
    beta: str
    avg_reciprocity: float
    avg_cycle_closure: float
    avg_triplet_closure: float
    avg_overlap_out: float
    avg_overlap_in: float


def cross_reciprocity(g: MultiplexGraph, alpha: str, beta: str, i: int) -> float:
    """Jaccard similarity of i's successors in alpha with i's predecessors in beta."""
    return jaccard(g.view(alpha).out_set(i), g.view(beta).in_set(i))


def cross_cycle_closure(g: MultiplexGraph, alpha: str, beta: str, i: int) -> float:
    """Cycle closure with the anchor out-set from alpha, walked over beta.

    Averages jaccard(out_alpha(i), in_beta(h)) over beta-predecessors h
    of i; in-degree in beta is the denominator, 0 when it vanishes.
    """
    va, vb = g.view(alpha), g.view(beta)
    return _mean_jaccard(va.out_set(i), vb.in_set(i), vb.in_set)


def cross_triplet_closure(g: MultiplexGraph, alpha: str, beta: str, i: int) -> float:
    """Triplet closure with the anchor out-set from alpha, compared in beta.

    Averages jaccard(out_alpha(i), out_beta(j)) over alpha-successors j
    of i; out-degree in alpha is the denominator, 0 when it vanishes.
    """
    va, vb = g.view(alpha), g.view(beta)
    return _mean_jaccard(va.out_set(i), va.out_set(i), vb.out_set)


def overlap_out(g: MultiplexGraph, alpha: str, beta: str, i: int) -> float:
    """Similarity of i's successor sets across the two layers (activity consistency)."""
    return jaccard(g.view(alpha).out_set(i), g.view(beta).out_set(i))


def overlap_in(g: MultiplexGraph, alpha: str, beta: str, i: int) -> float:
    """Similarity of i's predecessor sets across the two layers (popularity consistency)."""
    return jaccard(g.view(alpha).in_set(i), g.view(beta).in_set(i))


def cross_layer_metrics(g: MultiplexGraph, alpha: str, beta: str, i: int) -> CrossLayerMetrics:
    return CrossLayerMetrics(
        node=i,
        alpha=alpha,
        beta=beta,
        reciprocity=cross_reciprocity(g, alpha, beta, i),
        cycle_closure=cross_cycle_closure(g, alpha, beta, i),
        triplet_closure=cross_triplet_closure(g, alpha, beta, i),
        overlap_out=overlap_out(g, alpha, beta, i),
        overlap_in=overlap_in(g, alpha, beta, i),
    )


def cross_layer_table(g: MultiplexGraph, alpha: str, beta: str) -> tuple[CrossLayerMetrics, ...]:
    """Cross-layer records for every node."""
    return tuple(cross_layer_metrics(g, alpha, beta, i) for i in range(g.n_nodes))


def cross_layer_averages(g: MultiplexGraph, alpha: str, beta: str) -> CrossLayerAverages:
    """Whole-graph averages of the five pair metrics (all nodes, isolates count as 0)."""
    records = cross_layer_table(g, alpha, beta)
    n = g.n_nodes
    return CrossLayerAverages(
        alpha=alpha,
        beta=beta,
        avg_reciprocity=_mean([r.reciprocity for r in records], n),
        avg_cycle_closure=_mean([r.cycle_closure for r in records], n),
        avg_triplet_closure=_mean([r.triplet_closure for r in records], n),
        avg_overlap_out=_mean([r.overlap_out for r in records], n),
        avg_overlap_in=_mean([r.overlap_in for r in records], n),
    )


class AttributeTable:
    """Per-node finite sets of attribute tokens.

    Tokens are ``category:value`` strings; a node absent from the table
    has the empty set.  Keyed by node label so a table can be built and
    reused independently of any particular graph.
    """

    def __init__(self, tokens: Mapping[str, Iterable[str]] | None = None):
        self._tokens: dict[str, frozenset[str]] = {}
        if tokens:
            for label, toks in tokens.items():
                self._tokens[label] = frozenset(toks)

    def tokens(self, label: str) -> frozenset[str]:
        return self._tokens.get(label, frozenset())

    def labels(self) -> tuple[str, ...]:
        return tuple(sorted(self._tokens))

    def __len__(self) -> int:
        return len(self._tokens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AttributeTable):
            return NotImplemented
        return self._tokens == other._tokens

    def __repr__(self) -> str:
        return f"AttributeTable({len(self._tokens)} nodes)"


@dataclass(frozen=True)
class AttributeMetrics:
    """Attribute-similarity record of one actor on one layer."""

    node: int
    layer: str
    out_similarity: float
    in_similarity: float


def attribute_similarity(table: AttributeTable, a: str, b: str) -> float:
    """Jaccard similarity of two nodes' attribute token sets (both empty -> 0)."""
    return jaccard(table.tokens(a), table.tokens(b))


def unnetworked_similarity(labels: Iterable[str], table: AttributeTable) -> float:
    """Average attribute similarity over all unordered node pairs.

    The edge-free baseline the per-tie similarities are compared
    against.  fsum makes the value exactly invariant under relabeling.
    """
    labels = list(labels)
    n = len(labels)
    pairs = n * (n - 1) // 2
    if pairs == 0:
        return 0.0
    terms = [
        attribute_similarity(table, labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
    ]
    return math.fsum(terms) / pairs


def attribute_metrics(
    g: MultiplexGraph, layer: str, table: AttributeTable
) -> tuple[tuple[AttributeMetrics, ...], float]:
    """Per-node tie-weighted attribute similarities plus the unnetworked baseline.

    ``out_similarity`` averages similarity with the nodes i names as
    ties, ``in_similarity`` with the nodes naming i; degenerate degrees
    give 0.  The baseline ignores the layer entirely.
    """
    view = g.view(layer)
    records = []
    for i in range(g.n_nodes):
        mine = table.tokens(g.node_label(i))

        def sim(j: int) -> float:
            return jaccard(mine, table.tokens(g.node_label(j)))

        succ = sorted(view.out_set(i))
        pred = sorted(view.in_set(i))
        out_sim = math.fsum(sim(j) for j in succ) / len(succ) if succ else 0.0
        in_sim = math.fsum(sim(j) for j in pred) / len(pred) if pred else 0.0
        records.append(AttributeMetrics(node=i, layer=layer, out_similarity=out_sim, in_similarity=in_sim))
    baseline = unnetworked_similarity(g.labels, table)
    return tuple(records), baseline
