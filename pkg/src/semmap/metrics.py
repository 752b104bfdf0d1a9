"""Intrinsic and extrinsic evaluation of candidate graphs.

Metrics: Size (summed edge weight), Recall (share of appearing forms whose
function set induces a connected subgraph), Precision (connected appearing
function sets over all connected node subsets of size >= min_subset_size,
counted exactly), Avg_D / Div_D (mean and population standard deviation of
node degrees), and Acc against an expert gold standard. Everything here is
a pure function, cheap enough to recompute after every edit except
Precision, which is exact (and therefore capped by node count).
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .cooccurrence import build_g0
from .errors import CapacityError, MetricUndefinedError, PipelineStageError
from .graph import ConceptualGraph, GoldStandard, is_connected_subset, mask_of
from .merging import unconnected_forms
from .table import FormFunctionTable
from .validation import check_gold_matches_graph, check_graph_matches_table

DEFAULT_PRECISION_CAP = 25


@dataclass
class MetricsReport:
    """One evaluation snapshot of a graph against its table (and optional gold).

    ``precision`` is None when the exact count was skipped; ``precision_note``
    then says why. ``subset_min_size`` records the minimum subset size used
    for the possible-form universe.
    """

    size: float
    n_edges: int
    recall: float
    precision: float | None
    avg_d: float
    div_d: float
    acc: float | None
    unconnected_forms: list[str] = field(default_factory=list)
    precision_note: str | None = None
    subset_min_size: int = 2

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "n_edges": self.n_edges,
            "recall": self.recall,
            "precision": self.precision,
            "avg_d": self.avg_d,
            "div_d": self.div_d,
            "acc": self.acc,
            "unconnected_forms": list(self.unconnected_forms),
            "precision_note": self.precision_note,
            "subset_min_size": self.subset_min_size,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "MetricsReport":
        return cls(
            size=doc["size"],
            n_edges=doc["n_edges"],
            recall=doc["recall"],
            precision=doc.get("precision"),
            avg_d=doc["avg_d"],
            div_d=doc["div_d"],
            acc=doc.get("acc"),
            unconnected_forms=list(doc.get("unconnected_forms", [])),
            precision_note=doc.get("precision_note"),
            subset_min_size=doc.get("subset_min_size", 2),
        )


def size(g: ConceptualGraph) -> float:
    """Total weight of all edges; 0 for an empty edge set."""
    return sum(g.edges.values())


def recall(g: ConceptualGraph, table: FormFunctionTable) -> float:
    """Share of appearing forms (rows with a non-empty function set) whose
    functions induce a connected subgraph of g."""
    check_graph_matches_table(g, table)
    active = table.active_instances()
    if not active:
        raise MetricUndefinedError(
            "recall is undefined: the table has no row with a non-empty function set"
        )
    n_unconnected = len(unconnected_forms(g, table))
    return (len(active) - n_unconnected) / len(active)


def _count_anchor(args: tuple[tuple[int, ...], int, int, int]) -> int:
    """Connected subsets of size >= min_size whose minimum node is `anchor`."""
    masks, n, min_size, anchor = args
    total = 0
    full = (1 << n) - 1
    allowed = full & ~((1 << (anchor + 1)) - 1)
    start = 1 << anchor
    stack = [(start, 1, masks[anchor] & allowed, 0)]
    while stack:
        s_mask, sz, cand, forb = stack.pop()
        if sz >= min_size:
            total += 1
        tried = 0
        c = cand
        while c:
            u_bit = c & -c
            c ^= u_bit
            u = u_bit.bit_length() - 1
            ns = s_mask | u_bit
            nforb = forb | tried
            ncand = (c | (masks[u] & allowed)) & ~ns & ~nforb
            stack.append((ns, sz + 1, ncand, nforb))
            tried |= u_bit
    return total


def count_connected_subsets(
    g: ConceptualGraph, min_size: int = 2, workers: int | None = None
) -> int:
    """Exact number of node subsets of size >= min_size inducing a connected
    subgraph. Each subset is visited exactly once (per-anchor frontier
    extension), so cost is proportional to the count itself."""
    n = g.n_nodes
    masks = g.adjacency_masks()
    jobs = [(masks, n, min_size, a) for a in range(n)]
    workers = workers if workers is not None else _env_workers()
    if workers > 1 and n > 4:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(_count_anchor, jobs))
    return sum(_count_anchor(job) for job in jobs)


def _env_workers() -> int:
    try:
        return max(1, int(os.environ.get("SEMMAP_WORKERS", "1")))
    except ValueError:
        return 1


def precision(
    g: ConceptualGraph,
    table: FormFunctionTable,
    cap: int = DEFAULT_PRECISION_CAP,
    min_subset_size: int = 2,
    workers: int | None = None,
) -> float:
    """Connected appearing function sets over all possible connected subsets.

    The numerator deduplicates instances by function set and, like the
    denominator, only counts sets of size >= min_subset_size, keeping the
    ratio a set-vs-set comparison bounded by 1.
    """
    check_graph_matches_table(g, table)
    if g.n_nodes > cap:
        raise CapacityError(
            f"exact precision needs |V| <= {cap} nodes, got {g.n_nodes}; "
            "approximate counting is not supported"
        )
    possible = count_connected_subsets(g, min_subset_size, workers)
    if possible == 0:
        raise MetricUndefinedError(
            "precision is undefined: the graph has no connected subset of size "
            f">= {min_subset_size}"
        )
    adj = g.adjacency_masks()
    seen: set[int] = set()
    connected_sets = 0
    for inst in table.instances:
        if len(inst.functions) < min_subset_size:
            continue
        m = mask_of(inst.functions)
        if m in seen:
            continue
        seen.add(m)
        if is_connected_subset(adj, m):
            connected_sets += 1
    return connected_sets / possible


def degree_stats(g: ConceptualGraph) -> tuple[float, float]:
    """(mean, population standard deviation) of node degrees.

    The variance uses the sum-of-squares identity so graphs with identical
    (n, sum, sum-of-squares) degree profiles get bit-identical values;
    degrees are small integers, so the identity is numerically exact.
    """
    deg = g.degrees()
    n = len(deg)
    if n < 1:
        raise MetricUndefinedError("degree statistics need at least one node")
    s = sum(deg)
    ssq = sum(d * d for d in deg)
    avg = s / n
    var = max(ssq / n - avg * avg, 0.0)
    return avg, math.sqrt(var)


def accuracy(
    g: ConceptualGraph, gold: GoldStandard, mode: str = "matrix"
) -> float:
    """Agreement with the gold standard.

    matrix (default): share of off-diagonal unordered node pairs whose edge
    presence/absence matches. edge_overlap: |E(g) & E(gold)| / |E(gold)|.
    """
    check_gold_matches_graph(gold, g)
    if mode == "matrix":
        n = g.n_nodes
        pairs = n * (n - 1) // 2
        if pairs == 0:
            raise MetricUndefinedError("matrix accuracy needs at least 2 nodes")
        predicted = set(g.edges)
        disagreements = len(predicted.symmetric_difference(gold.edges))
        return (pairs - disagreements) / pairs
    if mode == "edge_overlap":
        if not gold.edges:
            raise MetricUndefinedError(
                "edge-overlap accuracy is undefined for an empty gold standard"
            )
        return len(gold.edges & set(g.edges)) / len(gold.edges)
    raise ValueError(f"unknown accuracy mode {mode!r} (use 'matrix' or 'edge_overlap')")


def evaluate(
    g: ConceptualGraph,
    table: FormFunctionTable,
    gold: GoldStandard | None = None,
    *,
    acc_mode: str = "matrix",
    precision_cap: int = DEFAULT_PRECISION_CAP,
    min_subset_size: int = 2,
    workers: int | None = None,
) -> MetricsReport:
    """Bundle every metric into one report.

    Precision is omitted (with a note) when the node count exceeds the exact
    cap or when the denominator is empty; every other metric error
    propagates, so a report is never silently partial.
    """
    check_graph_matches_table(g, table)
    unconn = unconnected_forms(g, table)
    active = table.active_instances()
    if not active:
        raise MetricUndefinedError(
            "recall is undefined: the table has no row with a non-empty function set"
        )
    rec = (len(active) - len(unconn)) / len(active)
    prec: float | None
    note: str | None = None
    try:
        prec = precision(g, table, precision_cap, min_subset_size, workers)
    except (CapacityError, MetricUndefinedError) as exc:
        prec = None
        note = str(exc)
    avg_d, div_d = degree_stats(g)
    acc = accuracy(g, gold, acc_mode) if gold is not None else None
    return MetricsReport(
        size=size(g),
        n_edges=g.n_edges,
        recall=rec,
        precision=prec,
        avg_d=avg_d,
        div_d=div_d,
        acc=acc,
        unconnected_forms=[inst.form for inst in unconn],
        precision_note=note,
        subset_min_size=min_subset_size,
    )


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Sample Pearson correlation coefficient of two equal-length sequences."""
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    n = len(xs)
    if n < 2:
        raise MetricUndefinedError("correlation needs at least 2 points")
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    dx = [x - mean_x for x in xs]
    dy = [y - mean_y for y in ys]
    sxx = sum(d * d for d in dx)
    syy = sum(d * d for d in dy)
    if sxx == 0 or syy == 0:
        raise MetricUndefinedError(
            "correlation is undefined when either sequence has zero variance"
        )
    r = sum(a * b for a, b in zip(dx, dy)) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


class SweepRow(NamedTuple):
    k: int
    time_s: float
    div_d: float
    acc: float | None


def sweep_point(
    table: FormFunctionTable,
    g0: ConceptualGraph,
    k: int,
    gold: GoldStandard | None = None,
    *,
    acc_mode: str = "matrix",
    precision_cap: int = DEFAULT_PRECISION_CAP,
) -> SweepRow:
    """Enumerate with the given k, evaluate the top candidate, time the whole run."""
    from .spanning import enumerate_mst, select_top_m

    t0 = time.perf_counter()
    cands = enumerate_mst(g0, k)
    best = select_top_m(cands, 1)[0]
    report = evaluate(
        best, table, gold, acc_mode=acc_mode, precision_cap=precision_cap
    )
    elapsed = time.perf_counter() - t0
    return SweepRow(k=k, time_s=elapsed, div_d=report.div_d, acc=report.acc)


def k_sweep(
    table: FormFunctionTable,
    k_grid: Sequence[int],
    gold: GoldStandard | None = None,
    *,
    acc_mode: str = "matrix",
    precision_cap: int = DEFAULT_PRECISION_CAP,
) -> list[SweepRow]:
    """Run the enumerate/select/evaluate loop for every k in an ascending grid."""
    if list(k_grid) != sorted(k_grid):
        raise ValueError("k_grid must be sorted ascending")
    if not k_grid:
        raise ValueError("k_grid must not be empty")
    g0 = build_g0(table)
    rows = []
    for k in k_grid:
        try:
            rows.append(
                sweep_point(
                    table, g0, k, gold, acc_mode=acc_mode, precision_cap=precision_cap
                )
            )
        except Exception as exc:
            raise PipelineStageError(f"k-sweep k={k}", exc) from exc
    return rows


def sweep_to_csv(rows: Sequence[SweepRow]) -> str:
    lines = ["k,time_s,div_d,acc"]
    for row in rows:
        acc = "" if row.acc is None else repr(row.acc)
        lines.append(f"{row.k},{row.time_s:.6f},{row.div_d!r},{acc}")
    return "\n".join(lines) + "\n"
