"""Construction of the fully connected co-occurrence graph from a table."""

from __future__ import annotations

from itertools import combinations

from .errors import ConstructionError
from .graph import ConceptualGraph
from .table import FormFunctionTable


def build_g0(table: FormFunctionTable) -> ConceptualGraph:
    """Build the complete weighted graph over the table's functions.

    The weight of {i, j} is the number of table rows whose function set
    contains both i and j. Every unordered pair gets an edge; zero-weight
    pairs are kept (they remain legal merge candidates).
    """
    n = table.n_functions
    if n < 2:
        raise ConstructionError(
            f"need at least 2 functions to build a co-occurrence graph, got {n}"
        )
    edges: dict[tuple[int, int], float] = {
        pair: 0 for pair in combinations(range(n), 2)
    }
    for inst in table.instances:
        for pair in combinations(sorted(inst.functions), 2):
            edges[pair] += 1
    return ConceptualGraph(table.functions, edges, provenance="initial-G0")
