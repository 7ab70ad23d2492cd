"""Tables, attribute schemas and equivalence-class partitioning."""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import EmptyTable, MissingColumn, MissingValue, RaggedRow, SchemaError


class AttributeRole(enum.Enum):
    EXPLICIT = "explicit"
    QUASI = "quasi"
    SENSITIVE_NUMERIC = "sensitive_numeric"
    SENSITIVE_CATEGORICAL = "sensitive_categorical"

    @property
    def is_sensitive(self) -> bool:
        return self in (AttributeRole.SENSITIVE_NUMERIC, AttributeRole.SENSITIVE_CATEGORICAL)


@dataclass(frozen=True)
class Attribute:
    name: str
    role: AttributeRole


@dataclass(frozen=True)
class Schema:
    attributes: tuple[Attribute, ...]

    def __post_init__(self):
        names = [a.name for a in self.attributes]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise SchemaError(f"duplicate attribute names: {dupes}")
        if not any(a.role.is_sensitive for a in self.attributes):
            raise SchemaError("schema needs at least one sensitive attribute")

    @classmethod
    def of(cls, pairs: Iterable[tuple[str, AttributeRole | str]]) -> Schema:
        return cls(tuple(Attribute(name, AttributeRole(role)) for name, role in pairs))

    @classmethod
    def from_dict(cls, doc) -> Schema:
        try:
            entries = doc["attributes"]
            pairs = [(str(e["name"]), e["role"]) for e in entries]
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"malformed schema document: {exc!r}") from None
        try:
            return cls.of(pairs)
        except ValueError as exc:
            if isinstance(exc, SchemaError):
                raise
            raise SchemaError(str(exc)) from None

    @classmethod
    def from_json(cls, text: str | bytes) -> Schema:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"schema is not valid JSON: {exc}") from None
        return cls.from_dict(doc)

    def to_dict(self) -> dict:
        return {"attributes": [{"name": a.name, "role": a.role.value} for a in self.attributes]}

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.attributes)

    def role(self, name: str) -> AttributeRole | None:
        for a in self.attributes:
            if a.name == name:
                return a.role
        return None

    def index(self, name: str) -> int:
        return self.names.index(name)

    def with_role(self, *roles: AttributeRole) -> tuple[str, ...]:
        return tuple(a.name for a in self.attributes if a.role in roles)

    @property
    def quasi_identifiers(self) -> tuple[str, ...]:
        return self.with_role(AttributeRole.QUASI)

    @property
    def sensitive(self) -> tuple[str, ...]:
        return self.with_role(AttributeRole.SENSITIVE_NUMERIC, AttributeRole.SENSITIVE_CATEGORICAL)


@dataclass(frozen=True)
class Table:
    schema: Schema
    rows: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        width = len(self.schema.attributes)
        for n, row in enumerate(self.rows):
            if len(row) != width:
                raise RaggedRow(n + 1, width, len(row))

    @classmethod
    def from_rows(cls, schema: Schema, rows: Iterable[Sequence[str]]) -> Table:
        return cls(schema, tuple(tuple(c.strip() for c in r) for r in rows))

    def __len__(self):
        return len(self.rows)

    def column(self, name: str) -> tuple[str, ...]:
        i = self.schema.index(name)
        return tuple(r[i] for r in self.rows)


@dataclass(frozen=True)
class EquivalenceClass:
    qi_key: tuple[str, ...]
    row_indices: tuple[int, ...]
    table: Table = field(repr=False, compare=False)

    def __len__(self):
        return len(self.row_indices)

    def sensitive_values(self, attribute: str) -> tuple[str, ...]:
        """The class's multiset of values for ``attribute``, in row order."""
        i = self.table.schema.index(attribute)
        rows = self.table.rows
        return tuple(rows[r][i] for r in self.row_indices)


MISSING_POLICIES = ("error", "drop-row")


def parse_csv(data: bytes, schema: Schema, missing: str = "error") -> Table:
    """Read a CSV byte stream into a :class:`Table` laid out per ``schema``.

    Columns not named in the schema are ignored. Cells are stripped of
    surrounding whitespace. An empty cell in a non-explicit column raises
    :class:`MissingValue` unless ``missing="drop-row"``, in which case the
    row is skipped.
    """
    if missing not in MISSING_POLICIES:
        raise ValueError(f"missing-value policy must be one of {MISSING_POLICIES}")
    text = data.decode("utf-8-sig")
    reader = csv.reader(io.StringIO(text, newline=""))
    header = next(reader, None)
    if header is None:
        raise EmptyTable("CSV has no header row")
    header = [h.strip() for h in header]
    positions = []
    for name in schema.names:
        if name not in header:
            raise MissingColumn(name)
        positions.append(header.index(name))
    required = [
        (pos, a.name) for pos, a in zip(positions, schema.attributes)
        if a.role is not AttributeRole.EXPLICIT
    ]

    rows = []
    for record in reader:
        if not record:
            continue
        if len(record) != len(header):
            raise RaggedRow(reader.line_num, len(header), len(record))
        cells = [c.strip() for c in record]
        empty = [name for pos, name in required if not cells[pos]]
        if empty:
            if missing == "error":
                raise MissingValue(reader.line_num, empty[0])
            continue
        rows.append(tuple(cells[p] for p in positions))
    if not rows:
        raise EmptyTable()
    return Table(schema, tuple(rows))


def partition_classes(table: Table) -> list[EquivalenceClass]:
    """Group rows sharing identical quasi-identifier values.

    Classes come back in order of first appearance. With no quasi-identifier
    attributes the whole table is one class.
    """
    qi_pos = [table.schema.index(n) for n in table.schema.quasi_identifiers]
    groups: dict[tuple[str, ...], list[int]] = {}
    for n, row in enumerate(table.rows):
        groups.setdefault(tuple(row[i] for i in qi_pos), []).append(n)
    return [EquivalenceClass(key, tuple(idx), table) for key, idx in groups.items()]
