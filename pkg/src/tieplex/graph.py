"""Multiplex directed-graph model.

A multiplex graph is a fixed node set observed under several named edge
sets called layers.  Basic layers hold raw ties; aggregate layers are
edge-set unions of basic layers and are materialized once at build time
(metrics re-read them constantly, so laziness buys nothing).  Ties are
binary and self-ties are rejected.  Everything is immutable after
construction, which makes views safe to share across threads or worker
processes without locking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateLayerName,
    DuplicateNodeLabel,
    InvalidParameter,
    SelfTie,
    UnknownLayer,
    UnknownNode,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class LayerSpec:
    """Declaration of one layer.

    A basic layer has no constituents; an aggregate names one or more
    basic layers whose edge sets it unions.  An aggregate with a single
    constituent is allowed (it is simply a renamed copy).
    """

    name: str
    kind: str = "basic"
    constituents: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "constituents", tuple(self.constituents))
        if not self.name:
            raise InvalidParameter("layer name must be non-empty")
        if self.kind not in ("basic", "aggregate"):
            raise InvalidParameter(f"layer '{self.name}': kind must be 'basic' or 'aggregate'")
        if self.kind == "basic" and self.constituents:
            raise InvalidParameter(f"basic layer '{self.name}' must not list constituents")
        if self.kind == "aggregate" and not self.constituents:
            raise InvalidParameter(f"aggregate layer '{self.name}' needs at least one constituent")

    @classmethod
    def basic(cls, name: str) -> "LayerSpec":
        return cls(name=name, kind="basic")

    @classmethod
    def aggregate(cls, name: str, *constituents: str) -> "LayerSpec":
        return cls(name=name, kind="aggregate", constituents=tuple(constituents))


class LayerView:
    """Read-only adjacency view of a single layer.

    Successor and predecessor sets are exposed as frozensets keyed by
    dense node id.  Invariants: ``j in out_set(i)`` iff ``i in in_set(j)``,
    and the out-degrees and in-degrees each sum to the edge count.
    """

    __slots__ = ("name", "n_nodes", "n_edges", "_out", "_in")

    def __init__(self, name: str, out_sets: Sequence[frozenset[int]], in_sets: Sequence[frozenset[int]]):
        self.name = name
        self._out = tuple(out_sets)
        self._in = tuple(in_sets)
        self.n_nodes = len(self._out)
        self.n_edges = sum(len(s) for s in self._out)

    def _check(self, i: int) -> None:
        if not 0 <= i < self.n_nodes:
            raise UnknownNode(f"node id {i} out of range for layer '{self.name}'")

    def out_set(self, i: int) -> frozenset[int]:
        """Successors of ``i``: the nodes ``i`` names as ties."""
        self._check(i)
        return self._out[i]

    def in_set(self, i: int) -> frozenset[int]:
        """Predecessors of ``i``: the nodes naming ``i`` as a tie."""
        self._check(i)
        return self._in[i]

    def out_degree(self, i: int) -> int:
        return len(self.out_set(i))

    def in_degree(self, i: int) -> int:
        return len(self.in_set(i))

    def undirected_neighbors(self, i: int) -> frozenset[int]:
        """Nodes adjacent to ``i`` ignoring direction."""
        self._check(i)
        return self._out[i] | self._in[i]

    def has_edge(self, i: int, j: int) -> bool:
        self._check(i)
        self._check(j)
        return j in self._out[i]

    def edges(self) -> Iterator[Edge]:
        """All directed edges, sorted by (source, target) id."""
        for i, succ in enumerate(self._out):
            for j in sorted(succ):
                yield (i, j)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset((i, j) for i, succ in enumerate(self._out) for j in succ)


class MultiplexGraph:
    """Immutable node registry plus named layers and their views.

    Built through :func:`build_graph`; do not construct directly.  Node
    ids are contiguous ``0..n-1`` in node-list order and map bijectively
    to labels.  Every declared layer, basic or aggregate, has a
    :class:`LayerView` over the full node set (nodes with no incident
    ties in a layer stay members of that layer's vertex set).
    """

    def __init__(
        self,
        labels: Sequence[str],
        specs: Sequence[LayerSpec],
        edge_sets: Mapping[str, frozenset[Edge]],
        duplicates_collapsed: Mapping[str, int],
    ):
        self._labels = tuple(labels)
        self._index = {label: i for i, label in enumerate(self._labels)}
        self._specs = tuple(specs)
        self._edge_sets = dict(edge_sets)
        self.duplicates_collapsed = dict(duplicates_collapsed)
        n = len(self._labels)
        self._views: dict[str, LayerView] = {}
        for spec in self._specs:
            out_sets = [set() for _ in range(n)]
            in_sets = [set() for _ in range(n)]
            for i, j in self._edge_sets[spec.name]:
                out_sets[i].add(j)
                in_sets[j].add(i)
            self._views[spec.name] = LayerView(
                spec.name,
                [frozenset(s) for s in out_sets],
                [frozenset(s) for s in in_sets],
            )

    @property
    def n_nodes(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def specs(self) -> tuple[LayerSpec, ...]:
        return self._specs

    @property
    def layer_names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self._specs)

    @property
    def basic_layer_names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self._specs if s.kind == "basic")

    def node_id(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownNode(f"unknown node label '{label}'") from None

    def node_label(self, i: int) -> str:
        if not 0 <= i < len(self._labels):
            raise UnknownNode(f"node id {i} out of range")
        return self._labels[i]

    def spec(self, name: str) -> LayerSpec:
        for s in self._specs:
            if s.name == name:
                return s
        raise UnknownLayer(f"unknown layer '{name}'")

    def view(self, name: str) -> LayerView:
        try:
            return self._views[name]
        except KeyError:
            raise UnknownLayer(f"unknown layer '{name}'") from None

    def edge_set(self, name: str) -> frozenset[Edge]:
        if name not in self._edge_sets:
            raise UnknownLayer(f"unknown layer '{name}'")
        return self._edge_sets[name]

    def canonical_form(self):
        """Order-insensitive content: used for equality and round-trips."""
        edges_by_label = {
            name: frozenset((self._labels[i], self._labels[j]) for i, j in es)
            for name, es in self._edge_sets.items()
        }
        return (frozenset(self._labels), self._specs, edges_by_label)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiplexGraph):
            return NotImplemented
        return self.canonical_form() == other.canonical_form()

    def __repr__(self) -> str:
        return f"MultiplexGraph(n_nodes={self.n_nodes}, layers={list(self.layer_names)})"


def build_graph(
    nodes: Iterable[str],
    layer_specs: Iterable[LayerSpec],
    edges: Iterable[tuple[str, str, str]],
) -> MultiplexGraph:
    """Build a multiplex graph from labels, layer declarations and edge triples.

    Parameters
    ----------
    nodes:
        Node labels; order assigns the dense ids.  Labels are
        case-sensitive exact strings (no normalization, so distinct
        survey ids never merge silently).
    layer_specs:
        Basic and aggregate layer declarations.  Aggregates may only
        reference declared basic layers.
    edges:
        ``(source_label, target_label, basic_layer_name)`` triples.
        Duplicate triples collapse to a single tie; the collapse count
        per layer is surfaced on ``duplicates_collapsed``, not raised.

    Raises
    ------
    DuplicateNodeLabel, DuplicateLayerName, UnknownLayer, UnknownNode, SelfTie
        Each names the offending record.
    """
    labels = list(nodes)
    seen: set[str] = set()
    for label in labels:
        if label in seen:
            raise DuplicateNodeLabel(f"duplicate node label '{label}'")
        seen.add(label)
    index = {label: i for i, label in enumerate(labels)}

    specs = list(layer_specs)
    names: set[str] = set()
    for spec in specs:
        if spec.name in names:
            raise DuplicateLayerName(f"duplicate layer name '{spec.name}'")
        names.add(spec.name)
    basic_names = {s.name for s in specs if s.kind == "basic"}
    for spec in specs:
        if spec.kind == "aggregate":
            for c in spec.constituents:
                if c not in basic_names:
                    raise UnknownLayer(
                        f"aggregate '{spec.name}' references undeclared basic layer '{c}'"
                    )

    edge_sets: dict[str, set[Edge]] = {name: set() for name in basic_names}
    duplicates: dict[str, int] = {s.name: 0 for s in specs}
    for src, dst, layer in edges:
        if src not in index:
            raise UnknownNode(f"edge ({src}, {dst}, {layer}): unknown node '{src}'")
        if dst not in index:
            raise UnknownNode(f"edge ({src}, {dst}, {layer}): unknown node '{dst}'")
        if layer not in basic_names:
            if layer in names:
                raise UnknownLayer(
                    f"edge ({src}, {dst}, {layer}): '{layer}' is an aggregate, edges go in basic layers"
                )
            raise UnknownLayer(f"edge ({src}, {dst}, {layer}): unknown layer '{layer}'")
        if src == dst:
            raise SelfTie(f"edge ({src}, {dst}, {layer}): self-ties are not allowed")
        pair = (index[src], index[dst])
        if pair in edge_sets[layer]:
            duplicates[layer] += 1
        else:
            edge_sets[layer].add(pair)

    final: dict[str, frozenset[Edge]] = {}
    for spec in specs:
        if spec.kind == "basic":
            final[spec.name] = frozenset(edge_sets[spec.name])
        else:
            union: set[Edge] = set()
            for c in spec.constituents:
                union |= edge_sets[c]
            final[spec.name] = frozenset(union)

    return MultiplexGraph(labels, specs, final, duplicates)


def layer_view(graph: MultiplexGraph, name: str) -> LayerView:
    """Adjacency view of one declared layer (basic or aggregate)."""
    return graph.view(name)
