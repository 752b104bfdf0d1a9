import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semmap import TableFormatError, parse_table, serialize_table

from oracles import random_table


def test_single_full_row():
    t = parse_table(b"language,form,A,B\nmandarin,chi,1,1\n")
    assert t.functions == ("A", "B")
    assert len(t.instances) == 1
    inst = t.instances[0]
    assert (inst.language, inst.form) == ("mandarin", "chi")
    assert inst.functions == frozenset({0, 1})
    assert t.sparsity == 0.0


def test_half_zero_sparsity():
    t = parse_table(b"language,form,A,B\nl1,f1,1,0\nl1,f2,0,1\n")
    assert len(t.instances) == 2
    assert t.sparsity == 0.5


def test_scale_fixture_shape(scale_table):
    assert len(scale_table.instances) == 42
    assert scale_table.n_functions == 17
    assert abs(scale_table.sparsity - 0.65) < 0.02


def test_all_zero_rows_flagged_but_kept():
    t = parse_table(b"language,form,A,B\nl1,f1,1,1\nl1,f2,0,0\n")
    assert len(t.instances) == 2
    assert len(t.active_instances()) == 1
    assert [i.form for i in t.empty_instances()] == ["f2"]
    assert t.sparsity == 0.5


def test_all_zero_body_sparsity_one():
    t = parse_table(b"language,form,A,B\nl1,f1,0,0\nl2,f2,0,0\n")
    assert t.sparsity == 1.0


def test_header_positional_any_labels():
    t = parse_table(b"lang,construction,A,B\nx,y,1,0\n")
    assert t.language_header == "lang"
    assert t.form_header == "construction"
    assert t.functions == ("A", "B")


def test_missing_header():
    with pytest.raises(TableFormatError, match="header"):
        parse_table(b"")
    with pytest.raises(TableFormatError, match="first two columns"):
        parse_table(b"language\n")


def test_no_function_columns():
    with pytest.raises(TableFormatError, match="function columns"):
        parse_table(b"language,form\nl,f\n")


def test_non_binary_cell_coordinates():
    with pytest.raises(TableFormatError, match=r"row 3, column 'B'"):
        parse_table(b"language,form,A,B\nl1,f1,1,0\nl1,f2,0,2\n")


def test_duplicate_function_labels():
    with pytest.raises(TableFormatError, match="duplicate function label 'A'"):
        parse_table(b"language,form,A,A\nl1,f1,1,0\n")


def test_ragged_row():
    with pytest.raises(TableFormatError, match="row 2"):
        parse_table(b"language,form,A,B\nl1,f1,1\n")


def test_function_index_resolution():
    t = parse_table(b"language,form,A,B,C\nl1,f1,1,0,1\n")
    assert t.index_of("C") == 2
    assert [f.label for f in t.function_ids] == ["A", "B", "C"]
    with pytest.raises(KeyError):
        t.index_of("Z")


def test_roundtrip_random_tables():
    rng = random.Random(7)
    for _ in range(20):
        t = random_table(rng, rng.randint(2, 9), rng.randint(1, 25), rng.random())
        again = parse_table(serialize_table(t))
        assert again.functions == t.functions
        assert again.instances == t.instances
        assert again.sparsity == t.sparsity


_cell = st.text(
    alphabet=st.characters(blacklist_categories=("Cs", "Cc")),
    min_size=1,
    max_size=8,
).map(str.strip).filter(bool)


@settings(max_examples=50, deadline=None)
@given(
    labels=st.lists(_cell, min_size=1, max_size=5, unique=True),
    rows=st.lists(
        st.tuples(_cell, _cell, st.lists(st.booleans(), min_size=5, max_size=5)),
        min_size=1,
        max_size=6,
    ),
)
def test_roundtrip_survives_csv_quoting(labels, rows):
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["language", "form", *labels])
    for lang, form, bits in rows:
        writer.writerow([lang, form, *["1" if b else "0" for b in bits[: len(labels)]]])
    t = parse_table(buf.getvalue())
    again = parse_table(serialize_table(t))
    assert again.functions == t.functions
    assert again.instances == t.instances
