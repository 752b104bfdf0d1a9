"""Incremental edge addition until every form satisfies the connectivity requirement.

Tree candidates are acyclic, so forms touching functions in different
branches can end up with disconnected induced subgraphs. The merger
repairs this by repeatedly collecting, over all still-disconnected forms,
the in-form node pairs that would bridge two of that form's components,
scoring each absent pair by (number of forms it helps) + (its co-occurrence
weight), adding the best one, and re-deriving the whole candidate set from
scratch once some form becomes fully connected. The result always reaches
recall 1.0 and never removes an edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import ConceptualGraph, bits, induced_components, mask_of
from .table import FormFunctionTable, FormInstance
from .validation import check_graph_matches_table


@dataclass(frozen=True)
class MergeCandidate:
    """An absent edge that would bridge components for >= 1 disconnected form."""

    edge: tuple[int, int]
    count: int
    weight: float

    @property
    def score(self) -> float:
        return self.count + self.weight


def unconnected_forms(
    g: ConceptualGraph, table: FormFunctionTable
) -> list[FormInstance]:
    """Rows whose function set induces a disconnected subgraph of g.

    Singleton and empty function sets are never reported.
    """
    adj = g.adjacency_masks()
    out = []
    for inst in table.instances:
        if len(inst.functions) < 2:
            continue
        if len(induced_components(adj, mask_of(inst.functions))) > 1:
            out.append(inst)
    return out


def _gather_candidates(
    g: ConceptualGraph, g0: ConceptualGraph, pending: list[FormInstance]
) -> list[MergeCandidate]:
    adj = g.adjacency_masks()
    counts: dict[tuple[int, int], int] = {}
    for inst in pending:
        comps = induced_components(adj, mask_of(inst.functions))
        if len(comps) < 2:
            continue
        members = [bits(c) for c in comps]
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                for u in members[i]:
                    for v in members[j]:
                        pair = (u, v) if u < v else (v, u)
                        counts[pair] = counts.get(pair, 0) + 1
    candidates = [
        MergeCandidate(pair, count, g0.edges.get(pair, 0))
        for pair, count in counts.items()
    ]
    candidates.sort(key=lambda c: (-c.score, c.edge))
    return candidates


def merge(
    g: ConceptualGraph, table: FormFunctionTable, g0: ConceptualGraph
) -> ConceptualGraph:
    """Add edges to g until no form is disconnected; returns provenance 'merged'.

    Added edges carry their co-occurrence weight from g0. Existing edges
    are never touched, so the merged edge set is a superset of g's.
    """
    check_graph_matches_table(g, table)
    check_graph_matches_table(g0, table)
    edges = dict(g.edges)
    work = ConceptualGraph(g.labels, edges, provenance="merged")
    pending = unconnected_forms(work, table)
    while pending:
        ranked = _gather_candidates(work, g0, pending)
        for cand in ranked:
            if cand.edge in work.edges:
                continue
            work = work.with_edge(*cand.edge, g0.edges.get(cand.edge, 0), "merged")
            still = [
                inst
                for inst in pending
                if len(
                    induced_components(work.adjacency_masks(), mask_of(inst.functions))
                )
                > 1
            ]
            if len(still) < len(pending):
                pending = still
                break
    return work
