import random

import pytest

from semmap import (
    ConceptualGraph,
    GraphFormatError,
    parse_gold,
    parse_graph,
    parse_table,
    serialize_gold,
    serialize_graph,
)

from oracles import random_connected_graph


def test_empty_edge_graph_json():
    g = ConceptualGraph(("A", "B", "C"), {}, "edited")
    data = serialize_graph(g, "json")
    again = parse_graph(data)
    assert again.labels == ("A", "B", "C")
    assert again.edges == {}
    assert again.provenance == "edited"


def test_triangle_dot_output():
    g = ConceptualGraph(("A", "B", "C"), {(0, 1): 1, (0, 2): 2, (1, 2): 3}, "edited")
    dot = serialize_graph(g, "dot").decode()
    edge_lines = [l for l in dot.splitlines() if "--" in l]
    assert len(edge_lines) == 3
    assert '"A" -- "B" [weight=1,' in dot
    assert "penwidth" in edge_lines[0]
    # thickness scales with weight
    widths = [float(l.split("penwidth=")[1].rstrip("];")) for l in edge_lines]
    assert widths == sorted(widths)


def test_json_roundtrip_random_graphs():
    rng = random.Random(11)
    for _ in range(25):
        g = random_connected_graph(rng, rng.randint(2, 10))
        again = parse_graph(serialize_graph(g, "json"))
        assert again == g


def test_parse_rejects_self_loop():
    doc = b"""{"nodes": [{"id": 0, "label": "A"}, {"id": 1, "label": "B"}],
               "edges": [{"source": 0, "target": 0, "weight": 1}],
               "provenance": "edited"}"""
    with pytest.raises(GraphFormatError, match="self-edge"):
        parse_graph(doc)


def test_parse_rejects_duplicate_pair():
    doc = b"""{"nodes": [{"id": 0, "label": "A"}, {"id": 1, "label": "B"}],
               "edges": [{"source": 0, "target": 1, "weight": 1},
                          {"source": 1, "target": 0, "weight": 2}],
               "provenance": "edited"}"""
    with pytest.raises(GraphFormatError, match="duplicate edge"):
        parse_graph(doc)


def test_parse_rejects_unknown_node_and_missing_weight():
    with pytest.raises(GraphFormatError, match="unknown node id"):
        parse_graph(
            b"""{"nodes": [{"id": 0, "label": "A"}, {"id": 1, "label": "B"}],
                 "edges": [{"source": 0, "target": 9, "weight": 1}]}"""
        )
    with pytest.raises(GraphFormatError, match="missing its weight"):
        parse_graph(
            b"""{"nodes": [{"id": 0, "label": "A"}, {"id": 1, "label": "B"}],
                 "edges": [{"source": 0, "target": 1}]}"""
        )


def test_parse_rejects_bad_json_and_provenance():
    with pytest.raises(GraphFormatError, match="not valid JSON"):
        parse_graph(b"{nope")
    with pytest.raises(GraphFormatError, match="provenance"):
        parse_graph(
            b"""{"nodes": [{"id": 0, "label": "A"}, {"id": 1, "label": "B"}],
                 "edges": [], "provenance": "mystery"}"""
        )


def test_gold_resolves_against_table():
    table = parse_table(b"language,form,A,B,C\nl,f,1,1,0\n")
    gold = parse_gold(
        b"""{"nodes": [{"id": 0, "label": "A"}, {"id": 1, "label": "B"}],
             "edges": [{"source": 0, "target": 1}]}""",
        table,
    )
    assert gold.edges == frozenset({(0, 1)})
    assert gold.labels == ("A", "B", "C")


def test_gold_unknown_label_listed():
    table = parse_table(b"language,form,A,B\nl,f,1,1\n")
    with pytest.raises(GraphFormatError, match="'X'"):
        parse_gold(
            b"""{"nodes": [{"id": 0, "label": "X"}, {"id": 1, "label": "B"}],
                 "edges": [{"source": 0, "target": 1}]}""",
            table,
        )


def test_gold_rejects_self_loop():
    table = parse_table(b"language,form,A,B\nl,f,1,1\n")
    with pytest.raises(GraphFormatError, match="self-edge"):
        parse_gold(
            b"""{"nodes": [{"id": 0, "label": "A"}],
                 "edges": [{"source": 0, "target": 0}]}""",
            table,
        )


def test_gold_roundtrip(scale_table, scale_gold):
    again = parse_gold(serialize_gold(scale_gold), scale_table)
    assert again.edges == scale_gold.edges
    assert again.labels == scale_gold.labels


def test_graph_out_of_range_edge_rejected():
    with pytest.raises(GraphFormatError, match="out of range"):
        ConceptualGraph(("A", "B"), {(0, 5): 1.0}, "edited")
