"""Command line interface: batch builds, standalone evaluation, and K benchmarks.

Exit codes: 0 success, 1 domain error (bad input, disconnected graph, ...),
2 usage error. Worker count for exact precision counting can be set with
the SEMMAP_WORKERS environment variable.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from pathlib import Path

from .cooccurrence import build_g0
from .errors import SemmapError
from .graph import parse_gold, parse_graph
from .metrics import (
    MetricsReport,
    accuracy,
    degree_stats,
    evaluate,
    pearson,
    sweep_point,
    sweep_to_csv,
)
from .session import run_pipeline, save_bundle
from .spanning import enumerate_mst
from .table import parse_table

METRIC_ROWS = ("Size", "n_edges", "Recall", "Precision", "Div_D", "Avg_D", "Acc", "Time (s)")


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if value.is_integer():
            return f"{value:.1f}"
        return f"{value:.6g}"
    return str(value)


def _report_rows(report: MetricsReport, elapsed: float | None) -> dict[str, str]:
    return {
        "Size": _fmt(report.size),
        "n_edges": _fmt(report.n_edges),
        "Recall": _fmt(report.recall),
        "Precision": _fmt(report.precision),
        "Div_D": _fmt(report.div_d),
        "Avg_D": _fmt(report.avg_d),
        "Acc": _fmt(report.acc),
        "Time (s)": _fmt(elapsed),
    }


def _print_metrics_table(columns: list[tuple[str, dict[str, str]]], out=None) -> None:
    out = out if out is not None else sys.stdout
    names = [name for name, _ in columns]
    widths = [max(len(row) for row in METRIC_ROWS)]
    widths += [
        max(len(name), max(len(vals[row]) for row in METRIC_ROWS))
        for name, vals in columns
    ]
    header = "Metric".ljust(widths[0]) + "  " + "  ".join(
        n.rjust(w) for n, w in zip(names, widths[1:])
    )
    print(header, file=out)
    print("-" * len(header), file=out)
    for row in METRIC_ROWS:
        cells = [vals[row].rjust(w) for (_, vals), w in zip(columns, widths[1:])]
        print(row.ljust(widths[0]) + "  " + "  ".join(cells), file=out)


def cmd_build(args: argparse.Namespace) -> int:
    raw = Path(args.input).read_bytes()
    gold_raw = Path(args.gold).read_bytes() if args.gold else None
    t0 = time.perf_counter()
    bundle = run_pipeline(
        raw,
        k=args.k,
        m=args.m,
        do_merge=args.merge,
        gold=gold_raw,
    )
    elapsed = time.perf_counter() - t0
    save_bundle(bundle, args.out, format=args.format)
    print(
        f"table: {len(bundle.table.instances)} rows x {bundle.table.n_functions} functions, "
        f"sparsity {bundle.table.sparsity:.3f}"
    )
    print(
        f"candidates: {len(bundle.candidates)} (spanning weight {_fmt(bundle.max_weight)}, "
        f"k={args.k}, truncated={bundle.truncated}, merged={bundle.merged})"
    )
    columns = [
        (f"cand_{i}", _report_rows(rep, elapsed))
        for i, rep in enumerate(bundle.reports)
    ]
    _print_metrics_table(columns)
    for i, rep in enumerate(bundle.reports):
        if rep.unconnected_forms:
            print(f"cand_{i} unconnected forms: {', '.join(rep.unconnected_forms)}")
    print(f"wrote bundle to {args.out}")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    table = parse_table(Path(args.input).read_bytes())
    graph = parse_graph(Path(args.graph).read_bytes())
    gold = parse_gold(Path(args.gold).read_bytes(), table) if args.gold else None
    mode = "edge_overlap" if args.acc_mode == "edges" else "matrix"
    report = evaluate(graph, table, gold, acc_mode=mode)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        _print_metrics_table([("value", _report_rows(report, None))])
        if report.unconnected_forms:
            print(f"unconnected forms: {', '.join(report.unconnected_forms)}")
        if report.precision_note:
            print(f"precision note: {report.precision_note}")
    return 0


def _candidate_correlation(table, gold, k: int) -> tuple[str, float | None]:
    """Pearson of Acc vs Div_D across every enumerated candidate at this k."""
    g0 = build_g0(table)
    cands = enumerate_mst(g0, k)
    if gold is None:
        return f"no gold standard given; skipping Acc/Div_D correlation (k={k})", None
    if len(cands.trees) < 2:
        return f"only {len(cands.trees)} candidate at k={k}; correlation undefined", None
    divs, accs = [], []
    for tree in cands.trees:
        divs.append(degree_stats(tree)[1])
        accs.append(accuracy(tree, gold))
    try:
        r = pearson(accs, divs)
    except SemmapError as exc:
        return f"correlation undefined over {len(divs)} candidates at k={k}: {exc}", None
    return f"pearson(Acc, Div_D) over {len(divs)} candidates at k={k}: {r:.4f}", r


def cmd_bench(args: argparse.Namespace) -> int:
    table = parse_table(Path(args.input).read_bytes())
    gold = parse_gold(Path(args.gold).read_bytes(), table) if args.gold else None
    k_grid = [int(x) for x in args.k_grid.split(",") if x.strip()]
    if k_grid != sorted(k_grid) or not k_grid:
        print("error: --k-grid must be a non-empty ascending list", file=sys.stderr)
        return 2
    g0 = build_g0(table)
    rows = []
    failures = 0
    for k in k_grid:
        try:
            runs = [
                sweep_point(table, g0, k, gold) for _ in range(max(1, args.repeats))
            ]
        except SemmapError as exc:
            failures += 1
            print(f"k={k} failed: {exc}", file=sys.stderr)
            continue
        median_time = statistics.median(r.time_s for r in runs)
        rows.append(runs[0]._replace(time_s=median_time))
    if not rows:
        print("error: every k in the grid failed", file=sys.stderr)
        return 1
    csv_text = sweep_to_csv(rows)
    Path(args.out).write_text(csv_text)
    print(csv_text, end="")
    summary, _ = _candidate_correlation(table, gold, k_grid[-1])
    print(summary)
    print(f"wrote {args.out}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning", access_log=False)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semmap",
        description="Build, evaluate, and benchmark semantic map graphs from form-function tables.",
        epilog="Set SEMMAP_WORKERS to parallelize exact precision counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="run the full pipeline and write a session bundle")
    p_build.add_argument("--input", required=True, help="form-function CSV path")
    p_build.add_argument("--k", type=int, default=10000, help="trees to enumerate before ranking (default 10000)")
    p_build.add_argument("--m", type=int, default=3, help="candidates to keep (default 3)")
    p_build.add_argument("--merge", action="store_true", help="augment candidates to reach recall 1.0")
    p_build.add_argument("--gold", help="gold standard JSON path (enables Acc)")
    p_build.add_argument("--out", required=True, help="output directory for the bundle")
    p_build.add_argument("--format", choices=("json", "dot"), default="json", help="also write DOT files with 'dot'")
    p_build.set_defaults(fn=cmd_build)

    p_eval = sub.add_parser("eval", help="evaluate one graph JSON against a table")
    p_eval.add_argument("--graph", required=True, help="graph JSON path")
    p_eval.add_argument("--input", required=True, help="form-function CSV path")
    p_eval.add_argument("--gold", help="gold standard JSON path")
    p_eval.add_argument("--acc-mode", choices=("matrix", "edges"), default="matrix")
    p_eval.add_argument("--json", action="store_true", help="print the report as JSON")
    p_eval.set_defaults(fn=cmd_eval)

    p_bench = sub.add_parser("bench", help="sweep K and record time/Div_D/Acc per value")
    p_bench.add_argument("--input", required=True, help="form-function CSV path")
    p_bench.add_argument("--k-grid", required=True, help="ascending comma list, e.g. 10,100,1000")
    p_bench.add_argument("--gold", help="gold standard JSON path")
    p_bench.add_argument("--out", required=True, help="output CSV path")
    p_bench.add_argument("--repeats", type=int, default=1, help="runs per k; the median time is kept")
    p_bench.set_defaults(fn=cmd_bench)

    p_serve = sub.add_parser("serve", help="start the HTTP editing service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--ui", default=None, help="static directory to serve at / (the web UI)")
    p_serve.set_defaults(fn=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SemmapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
