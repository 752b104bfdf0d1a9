"""Input validation helpers shared by the estimator, CLI, and service."""

from __future__ import annotations

from pathlib import Path

from .errors import EditError, GraphFormatError
from .graph import ConceptualGraph, GoldStandard
from .table import FormFunctionTable, parse_table


def as_table(X) -> FormFunctionTable:
    """Coerce estimator input to a FormFunctionTable.

    Accepts an already-parsed table, raw CSV bytes/str, or a path to a CSV
    file.
    """
    if isinstance(X, FormFunctionTable):
        return X
    if isinstance(X, Path):
        return parse_table(X.read_bytes())
    if isinstance(X, bytes):
        return parse_table(X)
    if isinstance(X, str):
        # a one-line string without a delimiter is far more likely a path
        if "\n" not in X and "," not in X:
            return parse_table(Path(X).read_bytes())
        return parse_table(X)
    raise TypeError(
        f"expected FormFunctionTable, CSV text/bytes, or path, got {type(X).__name__}"
    )


def check_graph_matches_table(g: ConceptualGraph, table: FormFunctionTable) -> None:
    if g.labels != table.functions:
        raise GraphFormatError(
            "graph nodes do not match the table's function columns: "
            f"graph has {list(g.labels)}, table has {list(table.functions)}"
        )


def check_gold_matches_graph(gold: GoldStandard, g: ConceptualGraph) -> None:
    if gold.labels != g.labels:
        raise GraphFormatError(
            "gold standard was resolved against a different function set than the graph"
        )


def check_node(g: ConceptualGraph, node: int | None, role: str) -> int:
    if not isinstance(node, int) or isinstance(node, bool):
        raise EditError(f"{role} must be an integer node id, got {node!r}")
    if not 0 <= node < g.n_nodes:
        raise EditError(f"{role} {node} out of range for {g.n_nodes} nodes")
    return node


def check_edge_pair(g: ConceptualGraph, source: int | None, target: int | None) -> tuple[int, int]:
    u = check_node(g, source, "source")
    v = check_node(g, target, "target")
    if u == v:
        raise EditError(f"self-edge on node {u} is not allowed")
    return (u, v) if u < v else (v, u)
