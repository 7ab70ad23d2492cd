import random

import pytest
from hypothesis import given, strategies as st

from tclose import AttributeRole, Schema, Table, parse_csv, partition_classes
from tclose.errors import EmptyTable, MissingColumn, MissingValue, RaggedRow, SchemaError

INCIDENT_SCHEMA = Schema.of(
    [("Address", "explicit"), ("Zone", "quasi"), ("Incident", "sensitive_categorical")]
)


def test_parse_incidents(incidents):
    assert len(incidents) == 14
    assert incidents.rows[0] == ("*", "2C", "power outage")
    assert incidents.schema.quasi_identifiers == ("Zone",)


def test_header_only_is_empty():
    with pytest.raises(EmptyTable):
        parse_csv(b"Address,Zone,Incident\n", INCIDENT_SCHEMA)


def test_no_header_is_empty():
    with pytest.raises(EmptyTable):
        parse_csv(b"", INCIDENT_SCHEMA)


def test_ragged_row_reports_line():
    data = b"Address,Zone,Incident\n*,2C,fire\n*,2C\n"
    with pytest.raises(RaggedRow) as err:
        parse_csv(data, INCIDENT_SCHEMA)
    assert err.value.line == 3


def test_missing_column():
    with pytest.raises(MissingColumn) as err:
        parse_csv(b"Address,Incident\n*,fire\n", INCIDENT_SCHEMA)
    assert err.value.name == "Zone"


def test_missing_value_policies():
    data = b"Address,Zone,Incident\n*,2C,fire\n*, ,theft\n,3B,flood\n"
    with pytest.raises(MissingValue) as err:
        parse_csv(data, INCIDENT_SCHEMA)
    assert (err.value.line, err.value.column) == (3, "Zone")
    table = parse_csv(data, INCIDENT_SCHEMA, missing="drop-row")
    # empty explicit identifier is fine, empty QI is dropped
    assert table.rows == (("*", "2C", "fire"), ("", "3B", "flood"))


def test_trim_quotes_and_extra_columns():
    data = ('Note,Address,Zone,Incident\nx,"1, Main St", 2C ,"power outage"\n'
            'y,é,2C,fire\n').encode()
    table = parse_csv(data, INCIDENT_SCHEMA)
    assert table.rows == (("1, Main St", "2C", "power outage"), ("é", "2C", "fire"))


def test_schema_json_roundtrip():
    doc = INCIDENT_SCHEMA.to_dict()
    assert Schema.from_dict(doc) == INCIDENT_SCHEMA
    assert INCIDENT_SCHEMA.role("Zone") is AttributeRole.QUASI


@pytest.mark.parametrize("doc", [
    '{"attributes": [{"name": "a", "role": "quasi"}]}',
    '{"attributes": [{"name": "a", "role": "bogus"}]}',
    '{"attributes": [{"name": "a", "role": "quasi"}, {"name": "a", "role": "sensitive_numeric"}]}',
    '{"attrs": []}',
    'not json',
])
def test_bad_schemas(doc):
    with pytest.raises(SchemaError):
        Schema.from_json(doc)


def test_incident_classes(incidents):
    classes = partition_classes(incidents)
    assert [c.qi_key for c in classes] == [("2C",), ("4F",), ("9A",), ("3B",)]
    assert [len(c) for c in classes] == [3, 4, 2, 5]
    assert classes[1].sensitive_values("Incident") == ("theft", "fire", "fatal accident", "fire")


def test_salary_classes(salary):
    classes = partition_classes(salary)
    assert [len(c) for c in classes] == [3, 3, 3]
    assert classes[1].qi_key == ("4790*", ">=40")


def test_distinct_rows_are_singletons():
    schema = Schema.of([("q", "quasi"), ("s", "sensitive_categorical")])
    table = Table.from_rows(schema, [(str(i), "x") for i in range(6)])
    assert [c.row_indices for c in partition_classes(table)] == [(i,) for i in range(6)]


def test_no_quasi_identifier_means_one_class():
    schema = Schema.of([("s", "sensitive_categorical")])
    table = Table.from_rows(schema, [("a",), ("b",), ("a",)])
    classes = partition_classes(table)
    assert len(classes) == 1 and classes[0].row_indices == (0, 1, 2)


def test_qi_matching_is_case_sensitive():
    schema = Schema.of([("q", "quasi"), ("s", "sensitive_categorical")])
    table = parse_csv(b"q,s\nab,1\nAB,1\n ab ,2\n", schema)
    assert [c.row_indices for c in partition_classes(table)] == [(0, 2), (1,)]


@given(st.lists(st.tuples(st.sampled_from("abc"), st.sampled_from("xy"), st.sampled_from("uvw")),
                min_size=1, max_size=40))
def test_partition_properties(rows):
    schema = Schema.of([("q1", "quasi"), ("q2", "quasi"), ("s", "sensitive_categorical")])
    table = Table.from_rows(schema, rows)
    classes = partition_classes(table)
    assert sorted(i for c in classes for i in c.row_indices) == list(range(len(rows)))
    for c in classes:
        assert len(c) >= 1
        assert {tuple(rows[i][:2]) for i in c.row_indices} == {c.qi_key}
    firsts = [c.row_indices[0] for c in classes]
    assert firsts == sorted(firsts)
    assert partition_classes(table) == classes


def test_partition_deterministic_large():
    rng = random.Random(3)
    schema = Schema.of([("q", "quasi"), ("s", "sensitive_numeric")])
    rows = [(str(rng.randrange(50)), str(rng.randrange(9))) for _ in range(2000)]
    table = Table.from_rows(schema, rows)
    a, b = partition_classes(table), partition_classes(table)
    assert [(c.qi_key, c.row_indices) for c in a] == [(c.qi_key, c.row_indices) for c in b]
