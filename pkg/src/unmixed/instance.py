"""Instance documents: a hypergraph plus optional labeling, matching and metadata.

Instances are JSON documents::

    {
      "schema": "unmixed-instance/1",
      "vertices": ["a", "b", "c"],
      "edges": [["a", "b"], ["b", "c"]],
      "partition": [["a", "b"], ...],      # optional n x r grid, rows first
      "matching": [["a", "b"], ...],       # optional
      "metadata": {"seed": 0, ...}         # optional
    }

:func:`write_instance` emits a canonical text: each edge ordered by vertex
position, edges sorted and deduplicated, one list per line, metadata keys
sorted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Any

from .hypergraph import Hypergraph, HypergraphError
from .partition import Matching, PartitionLabeling, validate_matching

SCHEMA = "unmixed-instance/1"
_KEYS = ("schema", "vertices", "edges", "partition", "matching", "metadata")


class InstanceError(ValueError):
    """Malformed instance document."""


@dataclass(frozen=True)
class InstanceDocument:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, ...], ...]
    partition: tuple[tuple[str, ...], ...] | None = None
    matching: tuple[tuple[str, ...], ...] | None = None
    metadata: dict[str, Any] | None = field(default=None, hash=False)

    def hypergraph(self) -> Hypergraph:
        return Hypergraph.build(self.vertices, self.edges)

    def labeling(self, H: Hypergraph | None = None) -> PartitionLabeling | None:
        if self.partition is None:
            return None
        return PartitionLabeling.from_names(H or self.hypergraph(), self.partition)

    def matching_of(self, H: Hypergraph | None = None) -> Matching | None:
        if self.matching is None:
            return None
        H = H or self.hypergraph()
        return validate_matching(H, [[H.vertex_id(x) for x in e] for e in self.matching])


def _fail(where: str, msg: str):
    raise InstanceError(f"{where}: {msg}")


def _name_list(value, where: str, known: dict[str, int] | None) -> tuple[str, ...]:
    if not isinstance(value, list):
        _fail(where, "expected a list of vertex names")
    out = []
    for k, x in enumerate(value):
        if not isinstance(x, str):
            _fail(f"{where}[{k}]", f"vertex name must be a string, got {x!r}")
        if known is not None and x not in known:
            _fail(f"{where}[{k}]", f"unknown vertex {x!r}")
        out.append(x)
    return tuple(out)


def _list_of_sets(value, where: str, known: dict[str, int]) -> tuple[tuple[str, ...], ...]:
    if not isinstance(value, list):
        _fail(where, "expected a list of lists")
    out = []
    for k, item in enumerate(value):
        names = _name_list(item, f"{where}[{k}]", known)
        if not names:
            _fail(f"{where}[{k}]", "empty set")
        if len(set(names)) != len(names):
            _fail(f"{where}[{k}]", "repeated vertex")
        out.append(names)
    return tuple(out)


def from_dict(data: Any) -> InstanceDocument:
    if not isinstance(data, dict):
        _fail("document", "top level must be an object")
    unknown = sorted(set(data) - set(_KEYS))
    if unknown:
        _fail("document", f"unknown field(s) {', '.join(unknown)}")
    if data.get("schema") != SCHEMA:
        _fail("schema", f"expected {SCHEMA!r}, got {data.get('schema')!r}")
    for key in ("vertices", "edges"):
        if key not in data:
            _fail(key, "missing required field")
    vertices = _name_list(data["vertices"], "vertices", None)
    known = {}
    for k, v in enumerate(vertices):
        if v in known:
            _fail(f"vertices[{k}]", f"duplicate vertex {v!r}")
        known[v] = k
    edges = _list_of_sets(data["edges"], "edges", known)

    partition = None
    if data.get("partition") is not None:
        partition = _list_of_sets(data["partition"], "partition", known)
        if len({len(row) for row in partition}) != 1:
            _fail("partition", "rows must all have the same length")
        seen: dict[str, str] = {}
        for j, row in enumerate(partition):
            for i, x in enumerate(row):
                if x in seen:
                    _fail(f"partition[{j}][{i}]", f"vertex {x!r} already placed at {seen[x]}")
                seen[x] = f"partition[{j}][{i}]"
        missing = [v for v in vertices if v not in seen]
        if missing:
            _fail("partition", f"grid misses vertex {missing[0]!r}")

    matching = None
    if data.get("matching") is not None:
        matching = _list_of_sets(data["matching"], "matching", known)
        used: set[str] = set()
        for k, e in enumerate(matching):
            if used & set(e):
                _fail(f"matching[{k}]", "overlaps an earlier matching edge")
            used |= set(e)

    metadata = data.get("metadata")
    if metadata is not None and not isinstance(metadata, dict):
        _fail("metadata", "expected an object")
    return InstanceDocument(vertices, edges, partition, matching, metadata)


def parse_instance(text: str) -> InstanceDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_dict(data)


def canonical(doc: InstanceDocument) -> InstanceDocument:
    pos = {v: k for k, v in enumerate(doc.vertices)}

    def sets(items):
        if items is None:
            return None
        canon = {tuple(sorted(e, key=pos.__getitem__)) for e in items}
        return tuple(sorted(canon, key=lambda e: [pos[x] for x in e]))

    return replace(doc, edges=sets(doc.edges), matching=sets(doc.matching))


def to_dict(doc: InstanceDocument) -> dict[str, Any]:
    doc = canonical(doc)
    out: dict[str, Any] = {
        "schema": SCHEMA,
        "vertices": list(doc.vertices),
        "edges": [list(e) for e in doc.edges],
    }
    if doc.partition is not None:
        out["partition"] = [list(row) for row in doc.partition]
    if doc.matching is not None:
        out["matching"] = [list(e) for e in doc.matching]
    if doc.metadata is not None:
        out["metadata"] = doc.metadata
    return out


def write_instance(doc: InstanceDocument) -> str:
    data = to_dict(doc)
    lines = ["{"]
    items = list(data.items())
    for k, (key, value) in enumerate(items):
        sep = "," if k < len(items) - 1 else ""
        if key in ("edges", "partition", "matching"):
            if value:
                inner = ",\n".join("    " + json.dumps(x) for x in value)
                lines.append(f'  "{key}": [\n{inner}\n  ]{sep}')
            else:
                lines.append(f'  "{key}": []{sep}')
        else:
            lines.append(f'  "{key}": {json.dumps(value, sort_keys=True)}{sep}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def document_from(H: Hypergraph, labeling: PartitionLabeling | None = None,
                  matching: Matching | None = None, metadata: dict | None = None) -> InstanceDocument:
    names = H.names
    return canonical(InstanceDocument(
        vertices=names,
        edges=tuple(tuple(names[v] for v in e) for e in H.edges),
        partition=None if labeling is None else tuple(tuple(names[v] for v in row) for row in labeling.grid),
        matching=None if matching is None else tuple(tuple(names[v] for v in e) for e in matching.edges),
        metadata=metadata,
    ))


def load_instance(path) -> InstanceDocument:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_instance(text)
    except InstanceError as exc:
        raise InstanceError(f"{path}: {exc}") from None


__all__ = [
    "SCHEMA", "InstanceDocument", "InstanceError", "HypergraphError",
    "parse_instance", "write_instance", "canonical", "document_from", "load_instance",
]
