"""Weighted undirected graphs over function nodes, plus JSON/DOT interchange.

The canonical interchange format is JSON::

    {"nodes": [{"id": 0, "label": "A"}, ...],
     "edges": [{"source": 0, "target": 1, "weight": 2}, ...],
     "provenance": "initial-G0"}

with ``source < target`` on every edge. Gold standards use the same shape
with weights omitted or ignored. Self-edges are rejected at parse time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import GraphFormatError
from .table import FormFunctionTable

PROVENANCES = ("initial-G0", "mst-candidate", "merged", "edited")


class WeightedEdge(NamedTuple):
    source: int
    target: int
    weight: float


def _norm_pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ConceptualGraph:
    """An undirected weighted graph whose nodes are the table's functions.

    Node i corresponds to labels[i]. Edges are keyed (u, v) with u < v.
    Instances are immutable; editing operations return new graphs.
    """

    labels: tuple[str, ...]
    edges: dict[tuple[int, int], float]
    provenance: str = "edited"
    _adj: tuple[int, ...] = field(repr=False, compare=False, default=())

    def __post_init__(self):
        n = len(self.labels)
        masks = [0] * n
        for (u, v) in self.edges:
            if not (0 <= u < v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for {n} nodes")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "_adj", tuple(masks))

    @property
    def n_nodes(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_pair(u, v) in self.edges

    def weight(self, u: int, v: int) -> float:
        return self.edges[_norm_pair(u, v)]

    def iter_edges(self) -> Iterator[WeightedEdge]:
        for (u, v) in sorted(self.edges):
            yield WeightedEdge(u, v, self.edges[(u, v)])

    def canonical_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def degrees(self) -> list[int]:
        deg = [0] * self.n_nodes
        for (u, v) in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-node neighbor bitmasks (bit v set on masks[u] iff u-v is an edge)."""
        return self._adj

    # -- copy-on-write edit helpers ------------------------------------

    def with_edge(self, u: int, v: int, weight: float, provenance: str = "edited") -> "ConceptualGraph":
        edges = dict(self.edges)
        edges[_norm_pair(u, v)] = weight
        return ConceptualGraph(self.labels, edges, provenance)

    def without_edge(self, u: int, v: int, provenance: str = "edited") -> "ConceptualGraph":
        edges = dict(self.edges)
        del edges[_norm_pair(u, v)]
        return ConceptualGraph(self.labels, edges, provenance)

    def with_provenance(self, provenance: str) -> "ConceptualGraph":
        return ConceptualGraph(self.labels, dict(self.edges), provenance)


@dataclass(frozen=True)
class GoldStandard:
    """An expert reference graph: unweighted edges over a table's functions."""

    labels: tuple[str, ...]
    edges: frozenset[tuple[int, int]]

    @property
    def n_nodes(self) -> int:
        return len(self.labels)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_pair(u, v) in self.edges


# -- connectivity over induced subgraphs -------------------------------


def mask_of(functions: Iterable[int]) -> int:
    m = 0
    for f in functions:
        m |= 1 << f
    return m


def induced_components(adj: tuple[int, ...], node_mask: int) -> list[int]:
    """Connected components (as bitmasks) of the subgraph induced by node_mask."""
    components = []
    remaining = node_mask
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                bit = f & -f
                f ^= bit
                nxt |= adj[bit.bit_length() - 1]
            frontier = nxt & node_mask & ~comp
            comp |= frontier
        components.append(comp)
        remaining &= ~comp
    return components


def is_connected_subset(adj: tuple[int, ...], node_mask: int) -> bool:
    """True iff node_mask induces a connected subgraph (singletons count)."""
    if node_mask == 0:
        return True
    if node_mask & (node_mask - 1) == 0:
        return True
    return len(induced_components(adj, node_mask)) == 1


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        bit = mask & -mask
        mask ^= bit
        out.append(bit.bit_length() - 1)
    return out


# -- serialization ------------------------------------------------------


def graph_to_dict(g: ConceptualGraph) -> dict:
    """Canonical JSON-ready payload for a graph (same shape as serialize_graph)."""
    return {
        "nodes": [{"id": i, "label": lab} for i, lab in enumerate(g.labels)],
        "edges": [
            {"source": u, "target": v, "weight": w} for u, v, w in g.iter_edges()
        ],
        "provenance": g.provenance,
    }


def serialize_graph(g: ConceptualGraph, format: str = "json") -> bytes:
    """Serialize a graph as canonical JSON or as DOT with weight/penwidth attrs."""
    if format == "json":
        return (json.dumps(graph_to_dict(g), indent=2) + "\n").encode("utf-8")
    if format == "dot":
        return _to_dot(g).encode("utf-8")
    raise ValueError(f"unknown graph format {format!r}")


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _fmt_weight(w: float) -> str:
    if isinstance(w, float) and w.is_integer():
        return str(int(w))
    return repr(w)


def _to_dot(g: ConceptualGraph) -> str:
    wmax = max((w for w in g.edges.values()), default=0)
    lines = ["graph semantic_map {", "  node [shape=ellipse];"]
    for lab in g.labels:
        lines.append(f"  {_dot_quote(lab)};")
    for u, v, w in g.iter_edges():
        penwidth = 0.5 + 4.0 * (w / wmax) if wmax > 0 else 1.0
        lines.append(
            f"  {_dot_quote(g.labels[u])} -- {_dot_quote(g.labels[v])}"
            f" [weight={_fmt_weight(w)}, penwidth={penwidth:.3f}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _load_json(raw: bytes | str, what: str) -> dict:
    text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{what} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GraphFormatError(f"{what} must be a JSON object")
    return doc


def _parse_nodes(doc: dict, what: str) -> list[tuple[int, str]]:
    nodes = doc.get("nodes")
    if not isinstance(nodes, list) or not nodes:
        raise GraphFormatError(f"{what} has no 'nodes' list")
    out = []
    seen_ids: set[int] = set()
    seen_labels: set[str] = set()
    for rec in nodes:
        if not isinstance(rec, dict) or "id" not in rec or "label" not in rec:
            raise GraphFormatError(f"{what}: every node needs 'id' and 'label'")
        nid, label = rec["id"], rec["label"]
        if not isinstance(nid, int) or isinstance(nid, bool):
            raise GraphFormatError(f"{what}: node id {nid!r} is not an integer")
        if not isinstance(label, str) or not label:
            raise GraphFormatError(f"{what}: node {nid} has an invalid label")
        if nid in seen_ids:
            raise GraphFormatError(f"{what}: duplicate node id {nid}")
        if label in seen_labels:
            raise GraphFormatError(f"{what}: duplicate node label {label!r}")
        seen_ids.add(nid)
        seen_labels.add(label)
        out.append((nid, label))
    out.sort()
    return out


def _parse_edges(doc: dict, id_map: dict[int, int], what: str, need_weight: bool):
    edges_doc = doc.get("edges", [])
    if not isinstance(edges_doc, list):
        raise GraphFormatError(f"{what}: 'edges' must be a list")
    edges: dict[tuple[int, int], float] = {}
    for rec in edges_doc:
        if not isinstance(rec, dict) or "source" not in rec or "target" not in rec:
            raise GraphFormatError(f"{what}: every edge needs 'source' and 'target'")
        s, t = rec["source"], rec["target"]
        if s not in id_map or t not in id_map:
            raise GraphFormatError(f"{what}: edge ({s}, {t}) references an unknown node id")
        if s == t:
            raise GraphFormatError(
                f"{what}: self-edge on node {s} rejected (self-edges carry no information)"
            )
        pair = _norm_pair(id_map[s], id_map[t])
        if pair in edges:
            raise GraphFormatError(f"{what}: duplicate edge for node pair {pair}")
        if need_weight:
            if "weight" not in rec:
                raise GraphFormatError(f"{what}: edge ({s}, {t}) is missing its weight")
            w = rec["weight"]
            if not isinstance(w, (int, float)) or isinstance(w, bool) or w < 0:
                raise GraphFormatError(
                    f"{what}: edge ({s}, {t}) weight must be a non-negative number"
                )
            edges[pair] = w
        else:
            edges[pair] = float(rec.get("weight", 0) or 0)
    return edges


def parse_graph(raw: bytes | str) -> ConceptualGraph:
    """Parse the canonical JSON graph format; round-trips serialize_graph output."""
    doc = _load_json(raw, "graph")
    nodes = _parse_nodes(doc, "graph")
    id_map = {nid: i for i, (nid, _) in enumerate(nodes)}
    edges = _parse_edges(doc, id_map, "graph", need_weight=True)
    provenance = doc.get("provenance", "edited")
    if provenance not in PROVENANCES:
        raise GraphFormatError(f"graph: unknown provenance {provenance!r}")
    return ConceptualGraph(tuple(lab for _, lab in nodes), edges, provenance)


def parse_gold(raw: bytes | str, table: FormFunctionTable) -> GoldStandard:
    """Parse a gold-standard graph and resolve its labels against the table.

    Unknown labels raise GraphFormatError listing every unmatched label.
    """
    doc = _load_json(raw, "gold standard")
    nodes = _parse_nodes(doc, "gold standard")
    unmatched = [lab for _, lab in nodes if lab not in table.functions]
    if unmatched:
        raise GraphFormatError(
            "gold standard: labels not present in the table: "
            + ", ".join(repr(lab) for lab in unmatched)
        )
    id_map = {nid: table.index_of(lab) for nid, lab in nodes}
    edges = _parse_edges(doc, id_map, "gold standard", need_weight=False)
    return GoldStandard(labels=table.functions, edges=frozenset(edges))


def serialize_gold(gold: GoldStandard) -> bytes:
    payload = {
        "nodes": [{"id": i, "label": lab} for i, lab in enumerate(gold.labels)],
        "edges": [{"source": u, "target": v} for (u, v) in sorted(gold.edges)],
        "provenance": "edited",
    }
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")
