"""Graph documents: a small JSON format plus the built-in example graphs.

A document is one JSON object::

    {"version": 1, "vertex_count": 3,
     "edges": [{"id": 0, "u": 0, "v": 1, "sign": 1}, ...],
     "rotation": [[0, 5], [1, 2], [3, 4]],
     "involution": {"vertices": [...], "edges": [...]}}

``rotation`` lists the darts around each vertex counterclockwise (dart
``2e`` sits at ``u`` and ``2e + 1`` at ``v``).  ``involution`` is given either
on the Tait graph as vertex and edge permutations or directly as a
permutation of medial darts under ``medial_darts``.  ``name`` and per-edge
``label`` are optional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping, Sequence

from .errors import DocumentError, MapError, MissingBlockError
from .graph import Edge, SignedMultigraph
from .planemap import MedialMap, PlaneMap, build_plane_map, medial

FORMAT_VERSION = 1
_TOP_KEYS = {"version", "name", "vertex_count", "edges", "rotation", "involution"}
_EDGE_KEYS = {"id", "u", "v", "sign", "label"}
_INVOLUTION_KEYS = ({"vertices", "edges"}, {"medial_darts"})


@dataclass(frozen=True)
class EdgeRecord:
    id: int
    u: int
    v: int
    sign: int
    label: str | None = None


@dataclass(frozen=True)
class GraphDocument:
    vertex_count: int
    edges: tuple[EdgeRecord, ...]
    rotation: tuple[tuple[int, ...], ...] | None = None
    involution: tuple[tuple[str, tuple[int, ...]], ...] | None = None
    name: str | None = None
    version: int = FORMAT_VERSION

    def graph(self) -> SignedMultigraph:
        return SignedMultigraph(self.vertex_count, tuple(Edge(e.id, e.u, e.v, e.sign) for e in self.edges))

    @property
    def labels(self) -> list[str]:
        return [e.label if e.label is not None else str(e.id) for e in self.edges]

    def with_signs(self, signs: Sequence[int]) -> "GraphDocument":
        if len(signs) != len(self.edges):
            raise DocumentError(f"{len(signs)} signs given for {len(self.edges)} edges")
        edges = tuple(EdgeRecord(e.id, e.u, e.v, int(signs[e.id]), e.label) for e in self.edges)
        return GraphDocument(self.vertex_count, edges, self.rotation, self.involution,
                             self.name, self.version)

    def plane_map(self) -> PlaneMap:
        if self.rotation is None:
            raise MissingBlockError("this command needs a 'rotation' block in the graph document")
        return build_plane_map(self.rotation, edges=[(e.u, e.v) for e in self.edges],
                               signs=[e.sign for e in self.edges])

    def medial(self) -> MedialMap:
        return medial(self.plane_map())

    def involution_block(self) -> dict[str, tuple[int, ...]]:
        if self.involution is None:
            raise MissingBlockError("this command needs an 'involution' block in the graph document")
        return dict(self.involution)

    def to_json(self) -> dict[str, Any]:
        doc: dict[str, Any] = {"version": self.version}
        if self.name is not None:
            doc["name"] = self.name
        doc["vertex_count"] = self.vertex_count
        edges = []
        for e in self.edges:
            rec = {"id": e.id, "u": e.u, "v": e.v, "sign": e.sign}
            if e.label is not None:
                rec["label"] = e.label
            edges.append(rec)
        doc["edges"] = edges
        if self.rotation is not None:
            doc["rotation"] = [list(c) for c in self.rotation]
        if self.involution is not None:
            doc["involution"] = {k: list(v) for k, v in self.involution}
        return doc


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{what} must be an integer, got {value!r}")
    return value


def _int_list(value, what: str) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise DocumentError(f"{what} must be a list of integers")
    return tuple(_int(x, what) for x in value)


def from_json(doc: Any) -> GraphDocument:
    """Validate a decoded JSON object and build a document from it."""
    if not isinstance(doc, Mapping):
        raise DocumentError("a graph document must be a JSON object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise DocumentError(f"unknown keys: {sorted(unknown)}")
    for key in ("version", "vertex_count", "edges"):
        if key not in doc:
            raise DocumentError(f"missing required key {key!r}")
    version = _int(doc["version"], "version")
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported format version {version}")
    vertex_count = _int(doc["vertex_count"], "vertex_count")
    if vertex_count < 1:
        raise DocumentError("vertex_count must be positive")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("name must be a string")

    raw_edges = doc["edges"]
    if not isinstance(raw_edges, list):
        raise DocumentError("edges must be a list")
    edges = []
    for i, rec in enumerate(raw_edges):
        if not isinstance(rec, Mapping):
            raise DocumentError(f"edge {i} must be an object")
        missing = {"id", "u", "v", "sign"} - set(rec)
        if missing:
            raise DocumentError(f"edge {i} lacks {sorted(missing)}")
        if set(rec) - _EDGE_KEYS:
            raise DocumentError(f"edge {i} has unknown keys {sorted(set(rec) - _EDGE_KEYS)}")
        eid, u, v, sign = (_int(rec[k], f"edge {i} {k}") for k in ("id", "u", "v", "sign"))
        if sign not in (1, -1):
            raise DocumentError(f"edge {i} sign must be +1 or -1, got {sign}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise DocumentError(f"edge {i} endpoint out of range")
        label = rec.get("label")
        if label is not None and not isinstance(label, str):
            raise DocumentError(f"edge {i} label must be a string")
        edges.append(EdgeRecord(eid, u, v, sign, label))
    if [e.id for e in edges] != list(range(len(edges))):
        raise DocumentError("edge ids must be 0..n-1 listed in order")

    rotation = None
    if doc.get("rotation") is not None:
        raw = doc["rotation"]
        if not isinstance(raw, list) or len(raw) != vertex_count:
            raise DocumentError("rotation must list one dart cycle per vertex")
        rotation = tuple(_int_list(c, "rotation entry") for c in raw)

    involution = None
    if doc.get("involution") is not None:
        raw = doc["involution"]
        if not isinstance(raw, Mapping) or set(raw) not in _INVOLUTION_KEYS:
            raise DocumentError("involution must have either 'vertices' and 'edges' or 'medial_darts'")
        involution = tuple(sorted((k, _int_list(v, f"involution {k}")) for k, v in raw.items()))

    return GraphDocument(vertex_count, tuple(edges), rotation, involution, name, version)


def parse_document(text: str) -> GraphDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return from_json(doc)


def serialize_document(doc: GraphDocument) -> str:
    return json.dumps(doc.to_json(), separators=(",", ":")) + "\n"


def parse_signs(text: str, n: int) -> list[int]:
    """Signs as a string of ``+``/``-`` characters or a comma list of ``1``/``-1``."""
    text = text.strip()
    if "," in text or text in ("1", "-1"):
        try:
            signs = [int(s) for s in text.split(",")]
        except ValueError as exc:
            raise DocumentError(f"bad sign list {text!r}") from exc
    else:
        table = {"+": 1, "-": -1}
        if any(c not in table for c in text):
            raise DocumentError(f"bad sign string {text!r}; use + and -")
        signs = [table[c] for c in text]
    if len(signs) != n or any(s not in (1, -1) for s in signs):
        raise DocumentError(f"need {n} signs of +1/-1, got {text!r}")
    return signs


# ---------------------------------------------------------------------------
# Built-in examples

def _doc(name, vertex_count, pairs, signs=None, labels=None, rotation=None, involution=None):
    signs = signs or [1] * len(pairs)
    labels = labels or [None] * len(pairs)
    edges = tuple(EdgeRecord(i, u, v, s, lab) for i, ((u, v), s, lab) in enumerate(zip(pairs, signs, labels)))
    rot = tuple(tuple(c) for c in rotation) if rotation is not None else None
    inv = tuple(sorted((k, tuple(v)) for k, v in involution.items())) if involution else None
    return GraphDocument(vertex_count, edges, rot, inv, name)


def _fig5():
    # Tait graph of 8_21.  The two parallel edges a, b carry the first two
    # bits; the remaining edges are c..h in id order.
    pairs = [(0, 1), (0, 1), (0, 2), (0, 3), (3, 2), (1, 2), (1, 4), (4, 2)]
    rotation = [[0, 2, 4, 6], [1, 10, 12, 3], [5, 15, 11, 9], [7, 8], [13, 14]]
    return _doc("fig5", 5, pairs, labels=list("abcdefgh"), rotation=rotation)


BUILTINS = {
    "fig5": _fig5,
    "triangle": lambda: _doc("triangle", 3, [(0, 1), (1, 2), (2, 0)],
                             rotation=[[0, 5], [1, 2], [3, 4]]),
    "p2": lambda: _doc("p2", 2, [(0, 1), (0, 1)], signs=[1, -1],
                       rotation=[[0, 2], [3, 1]],
                       involution={"vertices": [1, 0], "edges": [1, 0]}),
    "loop": lambda: _doc("loop", 1, [(0, 0)], rotation=[[0, 1]]),
    "isthmus": lambda: _doc("isthmus", 2, [(0, 1)], rotation=[[0], [1]]),
    "c4-symmetric": lambda: _doc("c4-symmetric", 4, [(0, 1), (1, 2), (2, 3), (3, 0)],
                                 signs=[1, 1, -1, -1],
                                 rotation=[[0, 7], [2, 1], [4, 3], [6, 5]],
                                 involution={"vertices": [2, 3, 0, 1], "edges": [2, 3, 0, 1]}),
}


def builtin(name: str) -> GraphDocument:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise DocumentError(f"unknown builtin {name!r}; choose from {', '.join(sorted(BUILTINS))}") from None


def load_document(source: str) -> GraphDocument:
    """Load ``builtin:NAME``, ``-`` for stdin, or a path to a JSON file."""
    if source.startswith("builtin:"):
        return builtin(source[len("builtin:"):])
    if source == "-":
        import sys
        return parse_document(sys.stdin.read())
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {source}: {exc.strerror}") from exc
    return parse_document(text)


def document_involution(doc: GraphDocument, med: MedialMap | None = None):
    """The involution block of ``doc`` as a :class:`MapInvolution` on its medial map."""
    from .symmetry import MapInvolution

    block = doc.involution_block()
    med = med if med is not None else doc.medial()
    try:
        if "medial_darts" in block:
            return MapInvolution.from_darts(med, block["medial_darts"])
        return MapInvolution.from_tait(med, block["vertices"], block["edges"])
    except (ValueError, MapError) as exc:
        raise DocumentError(f"bad involution block: {exc}") from exc
