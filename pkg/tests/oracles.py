"""Independent brute-force reference implementations.

Everything here deliberately avoids the package's internal machinery
(bitmask adjacency, weight-class decomposition, frontier enumeration):
plain sets, itertools scans over all subsets, and stdlib statistics. These
are the second route every fast-path result is checked against.
"""

from __future__ import annotations

import itertools
import random
import statistics

from semmap import ConceptualGraph, FormFunctionTable, GoldStandard, parse_table


# -- co-occurrence ------------------------------------------------------


def brute_cooccurrence(table: FormFunctionTable) -> dict[tuple[int, int], int]:
    n = table.n_functions
    counts = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = 0
            for inst in table.instances:
                if i in inst.functions and j in inst.functions:
                    c += 1
            counts[(i, j)] = c
    return counts


# -- spanning trees -----------------------------------------------------


def brute_spanning_trees(
    n: int, edges: list[tuple[int, int, float]]
) -> list[tuple[frozenset[tuple[int, int]], float]]:
    """Every spanning tree of the graph, as (edge set, total weight)."""
    if n == 1:
        return [(frozenset(), 0.0)]
    trees = []
    for combo in itertools.combinations(range(len(edges)), n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for idx in combo:
            u, v, _ = edges[idx]
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            pairs = frozenset(
                (min(edges[i][0], edges[i][1]), max(edges[i][0], edges[i][1]))
                for i in combo
            )
            trees.append((pairs, sum(edges[i][2] for i in combo)))
    return trees


def brute_max_spanning_trees(g: ConceptualGraph) -> set[frozenset[tuple[int, int]]]:
    edges = [(u, v, w) for (u, v), w in g.edges.items()]
    trees = brute_spanning_trees(g.n_nodes, edges)
    if not trees:
        return set()
    best = max(w for _, w in trees)
    return {pairs for pairs, w in trees if w == best}


def brute_max_spanning_weight(g: ConceptualGraph) -> float:
    edges = [(u, v, w) for (u, v), w in g.edges.items()]
    trees = brute_spanning_trees(g.n_nodes, edges)
    return max(w for _, w in trees)


# -- connectivity and metrics ------------------------------------------


def brute_connected(nodes: set[int], edge_pairs: set[tuple[int, int]]) -> bool:
    if len(nodes) <= 1:
        return True
    adjacency = {v: set() for v in nodes}
    for (u, v) in edge_pairs:
        if u in nodes and v in nodes:
            adjacency[u].add(v)
            adjacency[v].add(u)
    start = next(iter(nodes))
    seen = {start}
    stack = [start]
    while stack:
        for nb in adjacency[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen == nodes


def brute_recall(g: ConceptualGraph, table: FormFunctionTable) -> float:
    pairs = set(g.edges)
    active = [inst for inst in table.instances if inst.functions]
    good = sum(
        1 for inst in active if brute_connected(set(inst.functions), pairs)
    )
    return good / len(active)


def brute_unconnected(g: ConceptualGraph, table: FormFunctionTable) -> list[str]:
    pairs = set(g.edges)
    return [
        inst.form
        for inst in table.instances
        if inst.functions and not brute_connected(set(inst.functions), pairs)
    ]


def brute_count_connected_subsets(g: ConceptualGraph, min_size: int = 2) -> int:
    """Exhaustive scan over all 2^|V| node subsets."""
    pairs = set(g.edges)
    n = g.n_nodes
    count = 0
    for size in range(min_size, n + 1):
        for combo in itertools.combinations(range(n), size):
            if brute_connected(set(combo), pairs):
                count += 1
    return count


def brute_precision(g: ConceptualGraph, table: FormFunctionTable, min_size: int = 2) -> float:
    pairs = set(g.edges)
    possible = brute_count_connected_subsets(g, min_size)
    seen = set()
    for inst in table.instances:
        if len(inst.functions) >= min_size:
            seen.add(inst.functions)
    good = sum(1 for fs in seen if brute_connected(set(fs), pairs))
    return good / possible


def brute_degree_stats(g: ConceptualGraph) -> tuple[float, float]:
    deg = [0] * g.n_nodes
    for (u, v) in g.edges:
        deg[u] += 1
        deg[v] += 1
    return statistics.fmean(deg), statistics.pstdev(deg)


def brute_accuracy_matrix(g: ConceptualGraph, gold: GoldStandard) -> float:
    n = g.n_nodes
    agree = 0
    total = 0
    for u in range(n):
        for v in range(u + 1, n):
            total += 1
            if ((u, v) in g.edges) == ((u, v) in gold.edges):
                agree += 1
    return agree / total


def brute_accuracy_overlap(g: ConceptualGraph, gold: GoldStandard) -> float:
    matched = sum(1 for e in gold.edges if e in g.edges)
    return matched / len(gold.edges)


def brute_pearson(xs, ys) -> float:
    return statistics.correlation(list(xs), list(ys))


# -- random fixtures ----------------------------------------------------


def random_table(
    rng: random.Random,
    n_functions: int,
    n_rows: int,
    density: float,
) -> FormFunctionTable:
    labels = [f"fn{i}" for i in range(n_functions)]
    lines = ["language,form," + ",".join(labels)]
    for r in range(n_rows):
        bits = ["1" if rng.random() < density else "0" for _ in range(n_functions)]
        lines.append(f"lang{r % 5},form{r}," + ",".join(bits))
    return parse_table("\n".join(lines) + "\n")


def random_connected_graph(
    rng: random.Random,
    n: int,
    extra_edge_prob: float = 0.4,
    max_weight: int = 5,
) -> ConceptualGraph:
    """Connected graph: random spanning tree plus random extra edges."""
    labels = tuple(f"fn{i}" for i in range(n))
    edges = {}
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        pair = (u, v) if u < v else (v, u)
        edges[pair] = rng.randint(1, max_weight)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_prob:
                edges[(u, v)] = rng.randint(1, max_weight)
    return ConceptualGraph(labels, edges, provenance="edited")


def random_tree(rng: random.Random, n: int, max_weight: int = 5) -> ConceptualGraph:
    return random_connected_graph(rng, n, extra_edge_prob=0.0, max_weight=max_weight)
