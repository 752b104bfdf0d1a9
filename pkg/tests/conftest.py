from __future__ import annotations

from pathlib import Path

import pytest

from semmap import parse_gold, parse_graph, parse_table

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def handmade_table():
    return parse_table((FIXTURES / "handmade.csv").read_bytes())


@pytest.fixture(scope="session")
def handmade_graph():
    return parse_graph((FIXTURES / "handmade_graph.json").read_bytes())


@pytest.fixture(scope="session")
def handmade_gold(handmade_table):
    return parse_gold((FIXTURES / "handmade_gold.json").read_bytes(), handmade_table)


@pytest.fixture(scope="session")
def scale_table():
    return parse_table((FIXTURES / "eat_scale.csv").read_bytes())


@pytest.fixture(scope="session")
def scale_gold(scale_table):
    return parse_gold((FIXTURES / "eat_scale_gold.json").read_bytes(), scale_table)
