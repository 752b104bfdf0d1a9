"""Form-function table: parsing, serialization, and the row/column model.

The external format is CSV with a header whose first two columns identify
the language and the form (any header spelling is accepted in those two
positions); every remaining header cell is a function label. Body cells
must be exactly ``0`` or ``1``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import TableFormatError


class FunctionId(NamedTuple):
    """A function column: dense 0-based index plus its header label."""

    index: int
    label: str


@dataclass(frozen=True)
class FormInstance:
    """One table row: a (language, form) observation and the functions it expresses.

    ``functions`` holds 0-based column indices into the owning table's
    function list. An empty set marks a row that expresses nothing; such
    rows count toward sparsity but carry no connectivity obligation.
    """

    language: str
    form: str
    functions: frozenset[int]


@dataclass(frozen=True)
class FormFunctionTable:
    """A parsed binary form-function table.

    ``sparsity`` is the fraction of zero cells over rows x function columns.
    """

    functions: tuple[str, ...]
    instances: tuple[FormInstance, ...]
    sparsity: float
    language_header: str = "language"
    form_header: str = "form"
    _label_index: dict[str, int] = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "_label_index", {lab: i for i, lab in enumerate(self.functions)}
        )

    @property
    def n_functions(self) -> int:
        return len(self.functions)

    @property
    def function_ids(self) -> tuple[FunctionId, ...]:
        return tuple(FunctionId(i, lab) for i, lab in enumerate(self.functions))

    def index_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"unknown function label {label!r}") from None

    def active_instances(self) -> tuple[FormInstance, ...]:
        """Rows with a non-empty function set (the ones metrics quantify over)."""
        return tuple(inst for inst in self.instances if inst.functions)

    def empty_instances(self) -> tuple[FormInstance, ...]:
        """Rows flagged as expressing no function at all."""
        return tuple(inst for inst in self.instances if not inst.functions)


def parse_table(raw: bytes | str) -> FormFunctionTable:
    """Parse CSV bytes into a FormFunctionTable.

    Raises TableFormatError on a missing/short header, duplicate or empty
    function labels, ragged rows, or any body cell that is not 0/1 (the
    message carries 1-based row number and the column label).
    """
    text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if not rows:
        raise TableFormatError(
            "empty input: expected a header row starting with the language and form columns"
        )
    header = [cell.strip() for cell in rows[0]]
    if len(header) < 2:
        raise TableFormatError(
            "header must have 'languages' and 'forms' as its first two columns"
        )
    if len(header) < 3:
        raise TableFormatError(
            "header declares no function columns after the language and form columns"
        )
    labels = header[2:]
    seen: dict[str, int] = {}
    for i, lab in enumerate(labels):
        if not lab:
            raise TableFormatError(f"function column {i + 3} has an empty label")
        if lab in seen:
            raise TableFormatError(
                f"duplicate function label {lab!r} (columns {seen[lab] + 3} and {i + 3})"
            )
        seen[lab] = i

    instances: list[FormInstance] = []
    zero_cells = 0
    for rownum, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise TableFormatError(
                f"row {rownum}: expected {len(header)} cells, got {len(row)}"
            )
        language, form = row[0].strip(), row[1].strip()
        funcs = set()
        for j, cell in enumerate(row[2:]):
            value = cell.strip()
            if value == "1":
                funcs.add(j)
            elif value == "0":
                zero_cells += 1
            else:
                raise TableFormatError(
                    f"row {rownum}, column {labels[j]!r}: expected '0' or '1', got {cell!r}"
                )
        instances.append(FormInstance(language, form, frozenset(funcs)))

    n_cells = len(instances) * len(labels)
    sparsity = zero_cells / n_cells if n_cells else 0.0
    return FormFunctionTable(
        functions=tuple(labels),
        instances=tuple(instances),
        sparsity=sparsity,
        language_header=header[0],
        form_header=header[1],
    )


def serialize_table(table: FormFunctionTable) -> bytes:
    """Write a table back to CSV; parse_table(serialize_table(t)) preserves content."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([table.language_header, table.form_header, *table.functions])
    for inst in table.instances:
        bits = ["1" if j in inst.functions else "0" for j in range(table.n_functions)]
        writer.writerow([inst.language, inst.form, *bits])
    return buf.getvalue().encode("utf-8")
