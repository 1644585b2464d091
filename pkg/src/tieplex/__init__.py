"""Multiplex directed-graph analytics.

Actor metrics built on neighbor-set Jaccard similarity (reciprocity,
three-cycle and transitive-triplet closure), their cross-layer
generalizations and overlap indexes, attribute similarity, and layer
structure analytics (components, paths, assortativity, equivalence
grouping, wedge closure), plus deterministic dataset ingestion,
seeded synthetic generation, and table reports.
"""

from .crosslayer import (
    AttributeMetrics,
    AttributeTable,
    CrossLayerAverages,
    CrossLayerMetrics,
    attribute_metrics,
    attribute_similarity,
    cross_cycle_closure,
    cross_layer_averages,
    cross_layer_metrics,
    cross_layer_table,
    cross_reciprocity,
    cross_triplet_closure,
    overlap_in,
    overlap_out,
    unnetworked_similarity,
)
from .errors import (
    DuplicateLayerName,
    DuplicateNodeLabel,
    EmptyField,
    InvalidParameter,
    MalformedLine,
    MissingAttributes,
    MissingHeader,
    NotStronglyConnected,
    ParseError,
    SelfTie,
    TieplexError,
    UnknownBucketKey,
    UnknownLayer,
    UnknownNode,
)
from .graph import LayerSpec, LayerView, MultiplexGraph, build_graph, layer_view
from .io import (
    BucketRule,
    DatasetManifest,
    EdgeRecord,
    IngestionReport,
    LoadedDataset,
    graph_from_json,
    graph_to_json,
    load_dataset,
    load_manifest,
    manifest_from_dict,
    parse_attributes,
    parse_edges,
    parse_nodes,
)
from .metrics import (
    ActorMetrics,
    JaccardConvention,
    LayerMetrics,
    actor_metrics,
    cycle_closure,
    jaccard,
    layer_metrics,
    reciprocated_count,
    reciprocity,
    three_cycle_count,
    triplet_closure,
    triplet_count,
)
from .structure import (
    EquivalenceClass,
    LayerSummary,
    PathStats,
    WedgeReport,
    degree_assortativity,
    directed_degree_assortativity,
    induced_edge_count,
    largest_scc,
    layer_summary,
    path_stats,
    strongly_connected_components,
    structural_equivalence,
    wedge_closure,
)
from .synth import LayerParams, generate_synthetic, node_labels, write_demo_dataset

__version__ = "0.1.0"

__all__ = [
    "ActorMetrics",
    "AttributeMetrics",
    "AttributeTable",
    "BucketRule",
    "CrossLayerAverages",
    "CrossLayerMetrics",
    "DatasetManifest",
    "DuplicateLayerName",
    "DuplicateNodeLabel",
    "EdgeRecord",
    "EmptyField",
    "EquivalenceClass",
    "IngestionReport",
    "InvalidParameter",
    "JaccardConvention",
    "LayerMetrics",
    "LayerParams",
    "LayerSpec",
    "LayerSummary",
    "LayerView",
    "LoadedDataset",
    "MalformedLine",
    "MissingAttributes",
    "MissingHeader",
    "MultiplexGraph",
    "NotStronglyConnected",
    "ParseError",
    "PathStats",
    "SelfTie",
    "TieplexError",
    "UnknownBucketKey",
    "UnknownLayer",
    "UnknownNode",
    "WedgeReport",
    "actor_metrics",
    "attribute_metrics",
    "attribute_similarity",
    "build_graph",
    "cross_cycle_closure",
    "cross_layer_averages",
    "cross_layer_metrics",
    "cross_layer_table",
    "cross_reciprocity",
    "cross_triplet_closure",
    "cycle_closure",
    "degree_assortativity",
    "directed_degree_assortativity",
    "generate_synthetic",
    "graph_from_json",
    "graph_to_json",
    "induced_edge_count",
    "jaccard",
    "largest_scc",
    "layer_metrics",
    "layer_summary",
    "layer_view",
    "load_dataset",
    "load_manifest",
    "manifest_from_dict",
    "node_labels",
    "overlap_in",
    "overlap_out",
    "parse_attributes",
    "parse_edges",
    "parse_nodes",
    "path_stats",
    "reciprocated_count",
    "reciprocity",
    "strongly_connected_components",
    "structural_equivalence",
    "three_cycle_count",
    "triplet_closure",
    "triplet_count",
    "unnetworked_similarity",
    "wedge_closure",
    "write_demo_dataset",
]
