"""End-to-end pipeline and editable session state.

A session bundles the parsed table, the co-occurrence graph, the ranked
candidates, their reports, and one independent edit history per candidate.
Undo replays the remaining history onto the pristine candidate, which keeps
replay-determinism as the single source of truth for edit state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path

from .cooccurrence import build_g0
from .errors import EditError, PipelineStageError, SemmapError
from .graph import (
    ConceptualGraph,
    GoldStandard,
    parse_gold,
    serialize_graph,
)
from .merging import merge
from .metrics import DEFAULT_PRECISION_CAP, MetricsReport, evaluate
from .spanning import enumerate_mst, select_top_m
from .table import FormFunctionTable, parse_table, serialize_table
from .validation import check_edge_pair

EDIT_KINDS = ("add_edge", "delete_edge", "set_weight", "merge_all")


@dataclass(frozen=True)
class EditAction:
    """One graph edit: add/delete an edge, set a weight, or merge everything."""

    kind: str
    source: int | None = None
    target: int | None = None
    weight: float | None = None

    def to_dict(self) -> dict:
        doc: dict = {"kind": self.kind}
        if self.source is not None:
            doc["source"] = self.source
        if self.target is not None:
            doc["target"] = self.target
        if self.weight is not None:
            doc["weight"] = self.weight
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "EditAction":
        kind = doc.get("kind")
        if kind not in EDIT_KINDS:
            raise EditError(
                f"unknown edit kind {kind!r}; expected one of {', '.join(EDIT_KINDS)}"
            )
        return cls(
            kind=kind,
            source=doc.get("source"),
            target=doc.get("target"),
            weight=doc.get("weight"),
        )


@dataclass(frozen=True)
class SessionBundle:
    """Everything one editing session owns.

    ``candidates`` reflect the current edit state; ``initial_candidates``
    stay pristine so any history prefix can be replayed. ``histories[i]``
    belongs to candidate i and survives switching the active candidate.
    """

    table: FormFunctionTable
    g0: ConceptualGraph
    candidates: tuple[ConceptualGraph, ...]
    initial_candidates: tuple[ConceptualGraph, ...]
    reports: tuple[MetricsReport, ...]
    histories: tuple[tuple[EditAction, ...], ...]
    active: int = 0
    gold: GoldStandard | None = None
    k: int | None = 10000
    m: int = 3
    merged: bool = False
    truncated: bool = False
    max_weight: float = 0.0
    acc_mode: str = "matrix"
    precision_cap: int = DEFAULT_PRECISION_CAP

    @property
    def history(self) -> tuple[EditAction, ...]:
        return self.histories[self.active]

    def active_graph(self) -> ConceptualGraph:
        return self.candidates[self.active]

    def active_report(self) -> MetricsReport:
        return self.reports[self.active]


def run_pipeline(
    raw_table: bytes | str | FormFunctionTable,
    k: int | None = 10000,
    m: int = 3,
    do_merge: bool = False,
    gold: bytes | str | None = None,
    *,
    acc_mode: str = "matrix",
    precision_cap: int = DEFAULT_PRECISION_CAP,
) -> SessionBundle:
    """Ingest a CSV table (raw or already parsed) and produce the evaluated
    candidate bundle.

    Deterministic: the same inputs and parameters always yield an identical
    bundle. Errors carry the pipeline stage where they occurred.
    """

    def stage(name: str, fn, *args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except SemmapError as exc:
            raise PipelineStageError(name, exc) from exc

    if isinstance(raw_table, FormFunctionTable):
        table = raw_table
    else:
        table = stage("read-table", parse_table, raw_table)
    gold_std = stage("read-gold", parse_gold, gold, table) if gold is not None else None
    g0 = stage("build-graph", build_g0, table)
    cands = stage("enumerate-trees", enumerate_mst, g0, k)
    selected = select_top_m(cands, m)
    if do_merge:
        selected = [stage("merge", merge, t, table, g0) for t in selected]
    reports = tuple(
        stage(
            "evaluate",
            evaluate,
            t,
            table,
            gold_std,
            acc_mode=acc_mode,
            precision_cap=precision_cap,
        )
        for t in selected
    )
    frozen = tuple(selected)
    return SessionBundle(
        table=table,
        g0=g0,
        candidates=frozen,
        initial_candidates=frozen,
        reports=reports,
        histories=tuple(() for _ in frozen),
        active=0,
        gold=gold_std,
        k=k,
        m=m,
        merged=do_merge,
        truncated=cands.truncated,
        max_weight=cands.max_weight,
        acc_mode=acc_mode,
        precision_cap=precision_cap,
    )


def switch_active(bundle: SessionBundle, index: int) -> SessionBundle:
    if not 0 <= index < len(bundle.candidates):
        raise EditError(
            f"candidate index {index} out of range ({len(bundle.candidates)} candidates)"
        )
    return replace(bundle, active=index)


def _apply_action(
    graph: ConceptualGraph,
    action: EditAction,
    table: FormFunctionTable,
    g0: ConceptualGraph,
) -> ConceptualGraph:
    if action.kind == "merge_all":
        return merge(graph, table, g0)
    pair = check_edge_pair(graph, action.source, action.target)
    if action.kind == "add_edge":
        if pair in graph.edges:
            raise EditError(f"edge {pair} already present; use set_weight to change it")
        weight = action.weight if action.weight is not None else g0.edges.get(pair, 0)
        if weight < 0:
            raise EditError(f"edge weight must be non-negative, got {weight}")
        return graph.with_edge(*pair, weight)
    if action.kind == "delete_edge":
        if pair not in graph.edges:
            raise EditError(f"cannot delete absent edge {pair}")
        return graph.without_edge(*pair)
    if action.kind == "set_weight":
        if pair not in graph.edges:
            raise EditError(f"cannot set weight of absent edge {pair}")
        if action.weight is None or action.weight < 0:
            raise EditError(
                f"set_weight needs a non-negative weight, got {action.weight}"
            )
        return graph.with_edge(*pair, action.weight)
    raise EditError(f"unknown edit kind {action.kind!r}")


def _refresh(bundle: SessionBundle, index: int, graph: ConceptualGraph) -> SessionBundle:
    report = evaluate(
        graph,
        bundle.table,
        bundle.gold,
        acc_mode=bundle.acc_mode,
        precision_cap=bundle.precision_cap,
    )
    candidates = list(bundle.candidates)
    candidates[index] = graph
    reports = list(bundle.reports)
    reports[index] = report
    return replace(bundle, candidates=tuple(candidates), reports=tuple(reports))


def apply_edit(bundle: SessionBundle, action: EditAction) -> SessionBundle:
    """Apply one action to the active candidate; rejected edits leave the
    bundle untouched."""
    idx = bundle.active
    graph = _apply_action(bundle.candidates[idx], action, bundle.table, bundle.g0)
    updated = _refresh(bundle, idx, graph)
    histories = list(updated.histories)
    histories[idx] = histories[idx] + (action,)
    return replace(updated, histories=tuple(histories))


def undo(bundle: SessionBundle) -> SessionBundle:
    """Revert the active candidate's last action by replaying the rest.

    With an empty history this is a no-op returning the bundle unchanged;
    callers can compare history lengths to tell.
    """
    idx = bundle.active
    history = bundle.histories[idx]
    if not history:
        return bundle
    graph = bundle.initial_candidates[idx]
    for action in history[:-1]:
        graph = _apply_action(graph, action, bundle.table, bundle.g0)
    updated = _refresh(bundle, idx, graph)
    histories = list(updated.histories)
    histories[idx] = history[:-1]
    return replace(updated, histories=tuple(histories))


def replay(bundle: SessionBundle, index: int | None = None) -> ConceptualGraph:
    """Recompute a candidate's current graph from its pristine state and history."""
    idx = bundle.active if index is None else index
    graph = bundle.initial_candidates[idx]
    for action in bundle.histories[idx]:
        graph = _apply_action(graph, action, bundle.table, bundle.g0)
    return graph


def save_bundle(bundle: SessionBundle, out_dir: str | Path, format: str = "json") -> list[Path]:
    """Persist the bundle as table.csv, g0.json, candidate_<i>.json,
    report_<i>.json, history_<i>.json (plus .dot files when format='dot')."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def emit(name: str, data: bytes) -> None:
        path = out / name
        path.write_bytes(data)
        written.append(path)

    emit("table.csv", serialize_table(bundle.table))
    emit("g0.json", serialize_graph(bundle.g0, "json"))
    for i, (cand, report, history) in enumerate(
        zip(bundle.candidates, bundle.reports, bundle.histories)
    ):
        emit(f"candidate_{i}.json", serialize_graph(cand, "json"))
        if format == "dot":
            emit(f"candidate_{i}.dot", serialize_graph(cand, "dot"))
        emit(
            f"report_{i}.json",
            (json.dumps(report.to_dict(), indent=2) + "\n").encode("utf-8"),
        )
        emit(
            f"history_{i}.json",
            (
                json.dumps([a.to_dict() for a in history], indent=2) + "\n"
            ).encode("utf-8"),
        )
    return written
