#!/usr/bin/env python3
"""Regenerate the checked-in synthetic fixtures under tests/fixtures/.

The scale fixture imitates a mid-sized cross-linguistic survey: 42 rows over
17 functions at sparsity ~0.65, built from cyclic windows (forms cover
adjacent regions) with repeated patterns so co-occurrence counts collapse
onto few values. That makes the maximum-spanning-tree space tie-rich
(>10000 trees, so top-K truncation engages) while keeping candidate recall
high, which is the regime the merge step is designed for.

Deterministic: running this script twice produces identical bytes.
"""

from __future__ import annotations

import random
from pathlib import Path

from semmap import build_g0, enumerate_mst, parse_table, serialize_gold
from semmap.graph import GoldStandard

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

N_FUNCTIONS = 17
N_ROWS = 42
WIDTHS = (5, 6, 7)
COPIES = 3
SEED = 17


def make_scale_csv() -> str:
    rng = random.Random(SEED)
    labels = [f"F{i:02d}" for i in range(N_FUNCTIONS)]
    lines = ["language,form," + ",".join(labels)]
    row = 0
    while row < N_ROWS:
        width = rng.choice(WIDTHS)
        start = rng.randrange(N_FUNCTIONS)
        chosen = {(start + i) % N_FUNCTIONS for i in range(width)}
        bits = ["1" if i in chosen else "0" for i in range(N_FUNCTIONS)]
        for _ in range(min(COPIES, N_ROWS - row)):
            lines.append(f"lang{row % 7},form{row:02d}," + ",".join(bits))
            row += 1
    return "\n".join(lines) + "\n"


def make_gold(csv_text: str) -> bytes:
    """Perturb the top-ranked candidate: drop its 2 lightest edges, add 3
    absent pairs, so extrinsic accuracy is high but not perfect."""
    table = parse_table(csv_text)
    g0 = build_g0(table)
    best = enumerate_mst(g0, 10000).trees[0]
    edges = sorted(best.edges, key=lambda p: (best.edges[p], p))
    kept = set(edges[2:])
    absent = [p for p in sorted(g0.edges) if p not in best.edges]
    kept.update(absent[:3])
    return serialize_gold(GoldStandard(labels=table.functions, edges=frozenset(kept)))


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    csv_text = make_scale_csv()
    (FIXTURES / "eat_scale.csv").write_text(csv_text)
    (FIXTURES / "eat_scale_gold.json").write_bytes(make_gold(csv_text))
    table = parse_table(csv_text)
    print(
        f"wrote eat_scale.csv: {len(table.instances)} rows x {table.n_functions} "
        f"functions, sparsity {table.sparsity:.3f}"
    )
    print("wrote eat_scale_gold.json")


if __name__ == "__main__":
    main()
