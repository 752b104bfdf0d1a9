"""Maximum spanning tree enumeration, ranking, and top-K/top-M selection.

Enumeration exploits the weight-class structure of maximum spanning trees:
processing distinct weights in descending order, every maximum tree picks a
spanning forest of the contracted same-weight subgraph, and the resulting
vertex partition is choice-independent. The full tree set is therefore the
cartesian product of per-class, per-component spanning-forest choices, which
this module enumerates lazily in a fixed canonical order so "the first K
trees" is well defined and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

from .errors import ConnectivityError
from .graph import ConceptualGraph, bits, induced_components


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.n_components = n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.n_components -= 1
        return True

    def copy(self) -> "UnionFind":
        fresh = UnionFind.__new__(UnionFind)
        fresh.parent = list(self.parent)
        fresh.n_components = self.n_components
        return fresh


@dataclass(frozen=True)
class CandidateSet:
    """Maximum spanning trees kept after top-K truncation, sorted by Div_D.

    ``truncated`` is True iff more than ``k_requested`` trees exist;
    ``max_weight`` is the total weight every member shares.
    """

    trees: tuple[ConceptualGraph, ...]
    k_requested: int | None
    truncated: bool
    max_weight: float

    def __len__(self) -> int:
        return len(self.trees)


def _admitted_pool(g: ConceptualGraph) -> list[tuple[int, int, float]]:
    """Edge pool for tree extraction: zero-weight edges join only when the
    positive-weight edges alone leave the graph disconnected."""
    n = g.n_nodes
    positive = [(u, v, w) for (u, v), w in sorted(g.edges.items()) if w > 0]
    uf = UnionFind(n)
    for u, v, _ in positive:
        uf.union(u, v)
    if uf.n_components == 1:
        return positive
    full = [(u, v, w) for (u, v), w in sorted(g.edges.items())]
    for u, v, _ in full:
        uf.union(u, v)
    if uf.n_components > 1:
        comp_masks = induced_components(g.adjacency_masks(), (1 << n) - 1)
        components = [[g.labels[i] for i in bits(m)] for m in comp_masks]
        raise ConnectivityError(
            f"graph is disconnected ({len(components)} components): "
            + "; ".join("{" + ", ".join(c) + "}" for c in components),
            components=components,
        )
    return full


def max_spanning_weight(g: ConceptualGraph) -> float:
    """Total weight of a maximum spanning tree over the admitted edge pool."""
    pool = _admitted_pool(g)
    pool.sort(key=lambda e: (-e[2], e[0], e[1]))
    uf = UnionFind(g.n_nodes)
    total: float = 0
    for u, v, w in pool:
        if uf.union(u, v):
            total += w
    if uf.n_components > 1:
        raise ConnectivityError("edge pool does not span all functions")
    return total


def _component_spanning_trees(
    n_local: int, edges: list[tuple[int, int, int]], cap: int | None
) -> list[tuple[int, ...]]:
    """All spanning trees of a small connected multigraph, as tuples of edge ids.

    ``edges`` entries are (a, b, edge_id) with local node indices; parallel
    edges are distinct ids. Deterministic order: trees containing
    lower-numbered edges first. Enumeration stops once ``cap`` trees are
    collected.
    """
    out: list[tuple[int, ...]] = []
    m = len(edges)

    def connectable(idx: int, uf: UnionFind) -> bool:
        probe = uf.copy()
        for a, b, _ in edges[idx:]:
            if probe.union(a, b) and probe.n_components == 1:
                return True
        return probe.n_components == 1

    def rec(idx: int, uf: UnionFind, chosen: list[int]) -> bool:
        if uf.n_components == 1:
            out.append(tuple(chosen))
            return cap is None or len(out) < cap
        if idx == m:
            return True
        a, b, eid = edges[idx]
        if uf.find(a) == uf.find(b):
            return rec(idx + 1, uf, chosen)
        with_edge = uf.copy()
        with_edge.union(a, b)
        chosen.append(eid)
        keep_going = rec(idx + 1, with_edge, chosen)
        chosen.pop()
        if not keep_going:
            return False
        if connectable(idx + 1, uf):
            return rec(idx + 1, uf, chosen)
        return True

    rec(0, UnionFind(n_local), [])
    return out


def enumerate_mst(g0: ConceptualGraph, k: int | None = 10000) -> CandidateSet:
    """Enumerate up to k maximum spanning trees and sort them by Div_D.

    The first k trees in canonical enumeration order are collected, then
    sorted by degree standard deviation ascending (ties broken by the
    lexicographic order of canonical edge lists). ``k=None`` enumerates
    everything.
    """
    if k is not None and k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = g0.n_nodes
    pool = _admitted_pool(g0)
    # canonical edge ids = position in the (u, v)-sorted pool
    by_weight = sorted(range(len(pool)), key=lambda i: -pool[i][2])
    piece_cap = None if k is None else k + 1

    uf = UnionFind(n)
    forced: list[int] = []
    pieces: list[list[tuple[int, ...]]] = []
    for _, class_iter in groupby(by_weight, key=lambda i: pool[i][2]):
        class_ids = list(class_iter)
        super_edges: list[tuple[int, int, int]] = []
        for eid in class_ids:
            u, v, _ = pool[eid]
            ru, rv = uf.find(u), uf.find(v)
            if ru != rv:
                super_edges.append((ru, rv, eid))
        if not super_edges:
            continue
        # split the class graph into its connected components of supernodes
        touched = sorted({x for a, b, _ in super_edges for x in (a, b)})
        adj_local: dict[int, set[int]] = {x: set() for x in touched}
        for a, b, _ in super_edges:
            adj_local[a].add(b)
            adj_local[b].add(a)
        seen: set[int] = set()
        for root in touched:
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            while stack:
                x = stack.pop()
                for y in adj_local[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            local_index = {x: i for i, x in enumerate(sorted(comp))}
            comp_edges = sorted(
                (
                    (local_index[a], local_index[b], eid)
                    for a, b, eid in super_edges
                    if a in comp
                ),
                key=lambda e: e[2],
            )
            trees = _component_spanning_trees(len(comp), comp_edges, piece_cap)
            if len(trees) == 1:
                forced.extend(trees[0])
            else:
                pieces.append(trees)
        for a, b, _ in super_edges:
            uf.union(a, b)

    if uf.n_components > 1:
        raise ConnectivityError("edge pool does not span all functions")

    total = 1
    limit = None if k is None else k + 1
    for piece in pieces:
        total *= len(piece)
        if limit is not None and total >= limit:
            total = limit
            break
    truncated = k is not None and total > k
    n_emit = total if k is None else min(total, k)

    max_weight = sum(pool[eid][2] for eid in forced)
    if pieces:
        max_weight += sum(sum(pool[eid][2] for eid in piece[0]) for piece in pieces)

    trees: list[ConceptualGraph] = []
    indices = [0] * len(pieces)
    for _ in range(n_emit):
        edge_ids = list(forced)
        for piece, idx in zip(pieces, indices):
            edge_ids.extend(piece[idx])
        edges = {}
        for eid in edge_ids:
            u, v, w = pool[eid]
            edges[(u, v)] = w
        trees.append(ConceptualGraph(g0.labels, edges, provenance="mst-candidate"))
        # odometer: last piece varies fastest
        for pos in range(len(pieces) - 1, -1, -1):
            indices[pos] += 1
            if indices[pos] < len(pieces[pos]):
                break
            indices[pos] = 0

    trees.sort(key=_rank_key)
    return CandidateSet(
        trees=tuple(trees),
        k_requested=k,
        truncated=truncated,
        max_weight=max_weight,
    )


def _rank_key(tree: ConceptualGraph):
    # all candidates share |V| and |E|, so ordering by the (integer) sum of
    # squared degrees is exactly ordering by Div_D, with no float ties
    deg = tree.degrees()
    return (sum(d * d for d in deg), tree.canonical_edges())


def select_top_m(cands: CandidateSet, m: int) -> list[ConceptualGraph]:
    """First min(m, len) candidates in ranked order."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return list(cands.trees[:m])
