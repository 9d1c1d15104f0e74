import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from streamaudit import (AttributeSchema, ParseError, StreamDataset,
                         UnsupportedFeature, dataset_summary, parse_arff,
                         parse_csv, to_arff)
from streamaudit.stream_io import Instance

MINIMAL_ARFF = """\
% a comment
@relation tiny
@attribute x numeric
@attribute cls {A,B}
@data
"""

SMALL_ARFF = MINIMAL_ARFF + "1.0,A\n2.5,B\n3.0,A\n"


def arff(text):
    return parse_arff(io.StringIO(text))


def test_minimal_arff_zero_rows():
    ds = arff(MINIMAL_ARFF)
    assert ds.n_instances == 0
    assert ds.n_features == 1
    assert ds.class_values == ("A", "B")
    assert ds.schema[0].name == "x" and not ds.schema[0].is_nominal


def test_small_arff_order_and_values():
    ds = arff(SMALL_ARFF)
    assert ds.labels() == ["A", "B", "A"]
    assert [inst.features[0] for inst in ds.instances] == [1.0, 2.5, 3.0]


def test_arity_mismatch_names_line():
    with pytest.raises(ParseError) as err:
        arff(MINIMAL_ARFF + "1.0,A\n1.0,B,extra\n")
    assert err.value.line == 7


def test_unknown_nominal_value_rejected():
    with pytest.raises(ParseError):
        arff(MINIMAL_ARFF + "1.0,a\n")  # case-sensitive: 'a' != 'A'


def test_sparse_row_rejected():
    with pytest.raises(UnsupportedFeature):
        arff(MINIMAL_ARFF + "{0 1.0, 1 A}\n")


def test_missing_value_rejected():
    with pytest.raises(UnsupportedFeature):
        arff(MINIMAL_ARFF + "?,A\n")


def test_string_attribute_rejected():
    bad = "@relation r\n@attribute s string\n@attribute cls {A,B}\n@data\n"
    with pytest.raises(UnsupportedFeature):
        arff(bad)


def test_class_attribute_override():
    text = "@relation r\n@attribute cls {A,B}\n@attribute x numeric\n@data\nA,1\nB,2\n"
    ds = parse_arff(io.StringIO(text), class_index=0)
    assert ds.labels() == ["A", "B"]
    assert [i.features for i in ds.instances] == [(1.0,), (2.0,)]


def test_csv_basic():
    ds = parse_csv(io.StringIO("x,cls\n1,UP\n2,DOWN\n3,UP\n"))
    assert ds.n_instances == 3
    assert not ds.schema[0].is_nominal
    assert ds.class_values == ("UP", "DOWN")
    assert ds.labels() == ["UP", "DOWN", "UP"]


def test_csv_class_column_by_name():
    ds = parse_csv(io.StringIO("x,cls\n1,UP\n2,DOWN\n3,UP\n"), class_column="x")
    assert ds.class_values == ("1", "2", "3")
    assert ds.feature_schema()[0].name == "cls"
    assert ds.schema[1].values == ("UP", "DOWN")  # inferred nominal feature


def test_csv_ragged_row():
    with pytest.raises(ParseError) as err:
        parse_csv(io.StringIO("x,cls\n1,UP\n2\n"))
    assert err.value.line == 3


def test_csv_empty_input():
    with pytest.raises(ParseError):
        parse_csv(io.StringIO(""))


def test_csv_empty_cell():
    with pytest.raises(UnsupportedFeature):
        parse_csv(io.StringIO("x,cls\n,UP\n"))


def test_csv_arff_equivalence():
    ds_csv = parse_csv(io.StringIO("x,cls\n1,A\n2.5,B\n3,A\n"))
    ds_arff = arff(SMALL_ARFF.replace("1.0,A", "1,A"))
    assert ds_csv == ds_arff


def test_summary_counts():
    ds = arff(SMALL_ARFF)
    s = dataset_summary(ds)
    assert s == {"n_instances": 3, "n_features": 1,
                 "class_values": ["A", "B"],
                 "class_counts": {"A": 2, "B": 1}}


def test_summary_empty():
    s = dataset_summary(arff(MINIMAL_ARFF))
    assert s["n_instances"] == 0
    assert all(v == 0 for v in s["class_counts"].values())


@st.composite
def datasets(draw):
    n_num = draw(st.integers(0, 3))
    class_values = draw(st.lists(
        st.text(alphabet="abcXYZ", min_size=1, max_size=4),
        min_size=1, max_size=4, unique=True))
    schema = tuple(
        [AttributeSchema(f"f{i}", None) for i in range(n_num)]
        + [AttributeSchema("cls", tuple(class_values))])
    n = draw(st.integers(0, 12))
    instances = []
    for _ in range(n):
        feats = tuple(draw(st.floats(-1e6, 1e6, allow_nan=False))
                      for _ in range(n_num))
        label = draw(st.integers(0, len(class_values) - 1))
        instances.append(Instance(feats, label))
    return StreamDataset(schema, tuple(instances), n_num)


@given(datasets())
@settings(max_examples=60, deadline=None)
def test_arff_round_trip(ds):
    again = parse_arff(io.StringIO(to_arff(ds)))
    assert again == ds
