"""Deterministic dataset ingestion and canonical serialization.

File formats (all UTF-8, LF or CRLF):

* node file: one label per line, isolates included
* edge file: ``source,target,layer`` with that exact header
* attribute file: ``node,key,value`` with that exact header
* manifest: one JSON document naming the files, the layer
  declarations, the cross-layer pair list, and attribute bucketing
  rules; unknown fields are rejected

Parsers reject rather than repair: a bad line raises with its line
number instead of being dropped.  Comma is the default delimiter; a tab
in the header line switches to tab unless the manifest pins one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Mapping

from .crosslayer import AttributeTable
from .errors import (
    EmptyField,
    InvalidParameter,
    MalformedLine,
    MissingHeader,
    UnknownBucketKey,
    UnknownLayer,
    UnknownNode,
)
from .graph import LayerSpec, MultiplexGraph, build_graph

EDGE_HEADER = ("source", "target", "layer")
ATTRIBUTE_HEADER = ("node", "key", "value")
MANIFEST_FIELDS = {"nodes", "edges", "attributes", "layers", "pairs", "buckets", "delimiter"}


@dataclass(frozen=True)
class EdgeRecord:
    source: str
    target: str
    layer: str
    line_no: int


@dataclass(frozen=True)
class BucketRule:
    """Half-open numeric range [lo, hi) mapped to a label.

    The last rule of a key is closed ([lo, hi]) so the top of the scale
    belongs to the top bucket.
    """

    label: str
    lo: float
    hi: float


@dataclass(frozen=True)
class DatasetManifest:
    nodes_path: Path
    edges_path: Path
    attributes_path: Path | None
    layers: tuple[LayerSpec, ...]
    pairs: tuple[tuple[str, str], ...] | None
    buckets: dict[str, tuple[BucketRule, ...]]
    delimiter: str | None


@dataclass(frozen=True)
class IngestionReport:
    """What was read: counts per layer plus collapsed duplicates."""

    node_count: int
    edge_counts: dict[str, int]
    duplicates_collapsed: dict[str, int]
    attribute_node_count: int


@dataclass(frozen=True)
class LoadedDataset:
    graph: MultiplexGraph
    attributes: AttributeTable | None
    report: IngestionReport
    manifest: DatasetManifest


def _lines(stream: IO[str]) -> Iterable[tuple[int, str]]:
    for line_no, raw in enumerate(stream, start=1):
        yield line_no, raw.rstrip("\n").rstrip("\r")


def _split_header(stream_lines, expected: tuple[str, ...], delimiter: str | None, what: str):
    try:
        line_no, raw = next(stream_lines)
    except StopIteration:
        raise MissingHeader(f"{what} file is empty") from None
    raw = raw.lstrip("﻿")
    delim = delimiter or ("\t" if "\t" in raw else ",")
    fields = tuple(f.strip() for f in raw.split(delim))
    if fields != expected:
        raise MissingHeader(
            f"{what} file must start with header '{','.join(expected)}', got '{raw}'"
        )
    return delim


def _split_row(raw: str, delim: str, line_no: int, width: int) -> tuple[str, ...]:
    if raw.strip() == "":
        raise MalformedLine("blank line", line_no)
    parts = tuple(p.strip() for p in raw.split(delim))
    if len(parts) != width:
        raise MalformedLine(f"expected {width} fields, got {len(parts)}", line_no)
    for p in parts:
        if p == "":
            raise EmptyField("empty field", line_no)
    return parts


def parse_edges(stream: IO[str], delimiter: str | None = None) -> list[EdgeRecord]:
    """Parse an edge file into records, keeping line numbers for diagnostics."""
    lines = _lines(stream)
    delim = _split_header(lines, EDGE_HEADER, delimiter, "edge")
    records = []
    for line_no, raw in lines:
        src, dst, layer = _split_row(raw, delim, line_no, 3)
        records.append(EdgeRecord(src, dst, layer, line_no))
    return records


def parse_nodes(stream: IO[str]) -> list[str]:
    """Parse a node file: one label per line."""
    labels = []
    for line_no, raw in _lines(stream):
        label = raw.lstrip("﻿").strip()
        if label == "":
            raise MalformedLine("blank line in node file", line_no)
        labels.append(label)
    return labels


def _bucket_label(rules: tuple[BucketRule, ...], key: str, value: float, line_no: int) -> str:
    last = len(rules) - 1
    for pos, rule in enumerate(rules):
        if rule.lo <= value < rule.hi or (pos == last and value == rule.hi):
            return rule.label
    raise UnknownBucketKey(
        f"no bucket for key '{key}' covers value {value!r}", line_no
    )


def parse_attributes(
    stream: IO[str],
    buckets: Mapping[str, tuple[BucketRule, ...]] | None = None,
    delimiter: str | None = None,
) -> AttributeTable:
    """Parse an attribute file into per-node token sets.

    Keys listed in ``buckets`` must carry numeric values, which are
    replaced by their bucket label; any other value is kept verbatim.
    Duplicate rows collapse via set semantics.
    """
    buckets = dict(buckets or {})
    lines = _lines(stream)
    delim = _split_header(lines, ATTRIBUTE_HEADER, delimiter, "attribute")
    tokens: dict[str, set[str]] = {}
    for line_no, raw in lines:
        node, key, value = _split_row(raw, delim, line_no, 3)
        if key in buckets:
            try:
                numeric = float(value)
            except ValueError:
                raise MalformedLine(
                    f"key '{key}' is bucketed and needs a numeric value, got '{value}'",
                    line_no,
                ) from None
            value = _bucket_label(buckets[key], key, numeric, line_no)
        tokens.setdefault(node, set()).add(f"{key}:{value}")
    return AttributeTable(tokens)


def _layer_spec_from_dict(doc: dict) -> LayerSpec:
    if not isinstance(doc, dict):
        raise InvalidParameter(f"layer entry must be an object, got {doc!r}")
    extra = set(doc) - {"name", "kind", "constituents"}
    if extra:
        raise InvalidParameter(f"layer entry has unknown fields {sorted(extra)}")
    name = doc.get("name")
    if not isinstance(name, str):
        raise InvalidParameter("layer entry needs a string 'name'")
    constituents = tuple(doc.get("constituents", ()))
    kind = doc.get("kind", "aggregate" if constituents else "basic")
    return LayerSpec(name=name, kind=kind, constituents=constituents)


def _bucket_rules_from_list(key: str, entries) -> tuple[BucketRule, ...]:
    if not isinstance(entries, list) or not entries:
        raise InvalidParameter(f"bucket rules for '{key}' must be a non-empty list")
    rules = []
    for entry in entries:
        if not isinstance(entry, dict) or set(entry) != {"label", "min", "max"}:
            raise InvalidParameter(
                f"bucket rule for '{key}' needs exactly label/min/max, got {entry!r}"
            )
        lo, hi = float(entry["min"]), float(entry["max"])
        if not lo < hi:
            raise InvalidParameter(f"bucket rule for '{key}': min must be < max")
        rules.append(BucketRule(label=str(entry["label"]), lo=lo, hi=hi))
    return tuple(rules)


def manifest_from_dict(doc: dict, base_dir: str | Path = ".") -> DatasetManifest:
    """Validate a manifest document; no file is touched here (fail fast)."""
    base = Path(base_dir)
    if not isinstance(doc, dict):
        raise InvalidParameter("manifest must be a JSON object")
    unknown = set(doc) - MANIFEST_FIELDS
    if unknown:
        raise InvalidParameter(f"manifest has unknown fields {sorted(unknown)}")
    for required in ("nodes", "edges", "layers"):
        if required not in doc:
            raise InvalidParameter(f"manifest is missing required field '{required}'")

    layers = tuple(_layer_spec_from_dict(entry) for entry in doc["layers"])
    declared = [s.name for s in layers]
    if len(set(declared)) != len(declared):
        dup = next(n for n in declared if declared.count(n) > 1)
        raise InvalidParameter(f"manifest declares layer '{dup}' twice")
    basic = {s.name for s in layers if s.kind == "basic"}
    for s in layers:
        for c in s.constituents:
            if c not in basic:
                raise UnknownLayer(
                    f"manifest aggregate '{s.name}' references undeclared basic layer '{c}'"
                )

    pairs = None
    if doc.get("pairs") is not None:
        pairs = []
        for entry in doc["pairs"]:
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                raise InvalidParameter(f"pair entry must be a 2-element list, got {entry!r}")
            a, b = entry
            for name in (a, b):
                if name not in declared:
                    raise UnknownLayer(f"manifest pair references undeclared layer '{name}'")
            pairs.append((a, b))
        pairs = tuple(pairs)

    buckets = {
        key: _bucket_rules_from_list(key, entries)
        for key, entries in (doc.get("buckets") or {}).items()
    }

    delimiter = doc.get("delimiter")
    if delimiter is not None and delimiter not in (",", "\t"):
        raise InvalidParameter("manifest delimiter must be ',' or tab")

    attributes = doc.get("attributes")
    return DatasetManifest(
        nodes_path=base / doc["nodes"],
        edges_path=base / doc["edges"],
        attributes_path=(base / attributes) if attributes else None,
        layers=layers,
        pairs=pairs,
        buckets=buckets,
        delimiter=delimiter,
    )


def load_manifest(path: str | Path) -> DatasetManifest:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidParameter(f"manifest is not valid JSON: {exc}") from None
    return manifest_from_dict(doc, base_dir=path.parent)


def load_dataset(manifest: DatasetManifest | str | Path) -> LoadedDataset:
    """Read all files of a manifest and build the graph and attribute table.

    Edge records are validated against the node list and layer
    declarations with their line numbers before graph construction, so
    errors point at the offending file line.
    """
    if not isinstance(manifest, DatasetManifest):
        manifest = load_manifest(manifest)

    with open(manifest.nodes_path, encoding="utf-8") as fh:
        labels = parse_nodes(fh)
    with open(manifest.edges_path, encoding="utf-8") as fh:
        records = parse_edges(fh, delimiter=manifest.delimiter)

    label_set = set(labels)
    basic = {s.name for s in manifest.layers if s.kind == "basic"}
    for r in records:
        if r.source not in label_set:
            raise UnknownNode(f"line {r.line_no}: unknown node '{r.source}'")
        if r.target not in label_set:
            raise UnknownNode(f"line {r.line_no}: unknown node '{r.target}'")
        if r.layer not in basic:
            raise UnknownLayer(f"line {r.line_no}: '{r.layer}' is not a declared basic layer")

    graph = build_graph(labels, manifest.layers, [(r.source, r.target, r.layer) for r in records])

    attributes = None
    if manifest.attributes_path is not None:
        with open(manifest.attributes_path, encoding="utf-8") as fh:
            attributes = parse_attributes(fh, buckets=manifest.buckets, delimiter=manifest.delimiter)
        for label in attributes.labels():
            if label not in label_set:
                raise UnknownNode(f"attribute file references unknown node '{label}'")

    report = IngestionReport(
        node_count=graph.n_nodes,
        edge_counts={name: graph.view(name).n_edges for name in graph.layer_names},
        duplicates_collapsed=dict(graph.duplicates_collapsed),
        attribute_node_count=len(attributes) if attributes is not None else 0,
    )
    return LoadedDataset(graph=graph, attributes=attributes, report=report, manifest=manifest)


def graph_to_json(graph: MultiplexGraph) -> str:
    """Canonical JSON for a graph: sorted labels, sorted edge lists per basic layer.

    Aggregates are not serialized; they are reproduced from their
    constituents on load.  Output is byte-stable for equal graphs.
    """
    doc = {
        "nodes": sorted(graph.labels),
        "layers": [
            {"name": s.name, "kind": s.kind, "constituents": list(s.constituents)}
            for s in graph.specs
        ],
        "edges": {
            s.name: sorted(
                [graph.node_label(i), graph.node_label(j)] for i, j in graph.edge_set(s.name)
            )
            for s in graph.specs
            if s.kind == "basic"
        },
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def graph_from_json(text: str) -> MultiplexGraph:
    doc = json.loads(text)
    specs = [_layer_spec_from_dict(entry) for entry in doc["layers"]]
    triples = [
        (src, dst, name)
        for name, pairs in doc["edges"].items()
        for src, dst in pairs
    ]
    return build_graph(doc["nodes"], specs, triples)
