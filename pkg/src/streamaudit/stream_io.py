"""Stream dataset loading: ARFF (dense subset) and CSV.

A dataset is an ordered sequence of instances plus an attribute schema.
Instance order is the time axis and is preserved exactly as in the source
file. The class attribute defaults to the last attribute, the usual layout
for stream-mining benchmarks.

Supported ARFF subset: @relation, @attribute with numeric/real/integer or
nominal {a,b,...} types, '%' comments, dense comma-separated @data rows.
Sparse rows, string/date/relational attributes and missing values ('?')
are rejected with UnsupportedFeature.
"""

import csv
import io
from dataclasses import dataclass, field
from typing import Optional, Sequence, TextIO, Union

from .errors import ParseError, UnsupportedFeature

NUMERIC_TYPES = {"numeric", "real", "integer"}
REJECTED_TYPES = {"string", "date", "relational"}


@dataclass(frozen=True)
class AttributeSchema:
    """One attribute: numeric (values is None) or nominal (value list)."""

    name: str
    values: Optional[tuple] = None  # tuple of nominal values, or None

    def __post_init__(self):
        if self.values is not None:
            if len(self.values) == 0:
                raise ValueError(f"nominal attribute {self.name!r} has no values")
            if len(set(self.values)) != len(self.values):
                raise ValueError(f"duplicate values in attribute {self.name!r}")

    @property
    def is_nominal(self) -> bool:
        return self.values is not None


@dataclass(frozen=True)
class Instance:
    """One stream element: feature values plus a class-value index.

    Numeric features are floats; nominal features are indices into the
    attribute's value list. label is an index into the class attribute's
    value list.
    """

    features: tuple
    label: int


@dataclass(frozen=True)
class StreamDataset:
    """Ordered instances with their schema; position is the time index."""

    schema: tuple  # tuple of AttributeSchema
    instances: tuple  # tuple of Instance
    class_index: int = field(default=-1)

    def __post_init__(self):
        if self.class_index < 0:
            object.__setattr__(self, "class_index",
                               len(self.schema) + self.class_index)
        if not self.schema[self.class_index].is_nominal:
            raise ValueError("class attribute must be nominal")

    @property
    def n_instances(self) -> int:
        return len(self.instances)

    @property
    def n_features(self) -> int:
        return len(self.schema) - 1

    @property
    def class_attribute(self) -> AttributeSchema:
        return self.schema[self.class_index]

    @property
    def class_values(self) -> tuple:
        return self.class_attribute.values

    def labels(self) -> list:
        """Class values in stream order, as the original nominal strings."""
        values = self.class_values
        return [values[inst.label] for inst in self.instances]

    def feature_schema(self) -> list:
        """Schema entries excluding the class attribute, in order."""
        return [a for i, a in enumerate(self.schema) if i != self.class_index]


def _attr_value(attr: AttributeSchema, token: str, line_no: int):
    token = token.strip()
    if token == "?":
        raise UnsupportedFeature("missing value '?' not supported", line=line_no)
    if token == "":
        raise UnsupportedFeature("empty cell", line=line_no)
    if attr.is_nominal:
        if token.startswith(("'", '"')) and token.endswith(token[0]) and len(token) > 1:
            token = token[1:-1]
        try:
            return attr.values.index(token)
        except ValueError:
            raise ParseError(
                f"value {token!r} not in nominal set of attribute {attr.name!r}",
                line=line_no,
            ) from None
    try:
        return float(token)
    except ValueError:
        raise ParseError(
            f"non-numeric value {token!r} for numeric attribute {attr.name!r}",
            line=line_no,
        ) from None


def _parse_attribute_line(rest: str, line_no: int) -> AttributeSchema:
    rest = rest.strip()
    if not rest:
        raise ParseError("@attribute without a name", line=line_no)
    # name may be quoted and contain spaces
    if rest[0] in "'\"":
        quote = rest[0]
        end = rest.find(quote, 1)
        if end < 0:
            raise ParseError("unterminated quoted attribute name", line=line_no)
        name = rest[1:end]
        type_part = rest[end + 1:].strip()
    else:
        parts = rest.split(None, 1)
        if len(parts) != 2:
            raise ParseError("@attribute needs a name and a type", line=line_no)
        name, type_part = parts[0], parts[1].strip()
    if not type_part:
        raise ParseError(f"attribute {name!r} has no type", line=line_no)
    if type_part.startswith("{"):
        if not type_part.endswith("}"):
            raise ParseError("unterminated nominal value list", line=line_no)
        raw = type_part[1:-1]
        values = []
        for tok in raw.split(","):
            tok = tok.strip()
            if tok.startswith(("'", '"')) and tok.endswith(tok[0]) and len(tok) > 1:
                tok = tok[1:-1]
            values.append(tok)
        if any(v == "" for v in values) or not values:
            raise ParseError("empty nominal value", line=line_no)
        if len(set(values)) != len(values):
            raise ParseError("duplicate nominal values", line=line_no)
        return AttributeSchema(name, tuple(values))
    kind = type_part.split()[0].lower()
    if kind in NUMERIC_TYPES:
        return AttributeSchema(name, None)
    if kind in REJECTED_TYPES:
        raise UnsupportedFeature(f"attribute type {kind!r} not supported",
                                 line=line_no)
    raise ParseError(f"unknown attribute type {type_part!r}", line=line_no)


def parse_arff(source: Union[str, TextIO], class_index: Optional[int] = None
               ) -> StreamDataset:
    """Parse a dense-format ARFF text stream into a StreamDataset.

    source may be a file path or an open text stream. The class attribute
    is the last attribute unless class_index says otherwise. Nominal value
    matching is case-sensitive, whitespace-trimmed.
    """
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            return parse_arff(fh, class_index=class_index)

    schema = []
    instances = []
    in_data = False
    saw_relation = False
    for line_no, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if not in_data:
            lower = line.lower()
            if lower.startswith("@relation"):
                saw_relation = True
                continue
            if lower.startswith("@attribute"):
                schema.append(_parse_attribute_line(line[len("@attribute"):],
                                                    line_no))
                continue
            if lower.startswith("@data"):
                if not schema:
                    raise ParseError("@data before any @attribute", line=line_no)
                in_data = True
                continue
            raise ParseError(f"unexpected header line {line!r}", line=line_no)
        # data section
        if line.startswith("{"):
            raise UnsupportedFeature("sparse-format row", line=line_no)
        tokens = line.split(",")
        if len(tokens) != len(schema):
            raise ParseError(
                f"row has {len(tokens)} values, schema has {len(schema)} "
                "attributes", line=line_no)
        instances.append((line_no, tokens))
    if not saw_relation and not schema:
        raise ParseError("no @relation/@attribute header found")
    if not in_data:
        raise ParseError("no @data section found")

    cls = class_index if class_index is not None else len(schema) - 1
    if not schema[cls].is_nominal:
        raise ParseError(f"class attribute {schema[cls].name!r} is not nominal")

    parsed = []
    for line_no, tokens in instances:
        values = [_attr_value(a, t, line_no) for a, t in zip(schema, tokens)]
        label = values.pop(cls)
        parsed.append(Instance(tuple(values), label))
    return StreamDataset(tuple(schema), tuple(parsed), cls)


def _infer_column(values: Sequence[str]):
    """Numeric if every value parses as a number, else nominal by first
    occurrence order. Returns (AttributeSchema values or None, parsed col)."""
    floats = []
    for v in values:
        try:
            floats.append(float(v))
        except ValueError:
            floats = None
            break
    if floats is not None:
        return None, floats
    seen = {}
    for v in values:
        if v not in seen:
            seen[v] = len(seen)
    return tuple(seen.keys()), [seen[v] for v in values]


def parse_csv(source: Union[str, TextIO], has_header: bool = True,
              class_column: Union[int, str, None] = None) -> StreamDataset:
    """Parse a rectangular CSV into a StreamDataset.

    The class column (default: last) is always treated as nominal, value
    order by first occurrence. Other columns are numeric when every value
    parses as a number, else nominal.
    """
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8", newline="") as fh:
            return parse_csv(fh, has_header=has_header, class_column=class_column)

    reader = csv.reader(source)
    rows = []
    for row_no, row in enumerate(reader, start=1):
        if not row or row[0].lstrip().startswith("#"):  # '#' lines: metadata
            continue
        rows.append((row_no, [c.strip() for c in row]))
    if not rows:
        raise ParseError("empty CSV input")

    if has_header:
        header = rows[0][1]
        rows = rows[1:]
    else:
        header = [f"col{i}" for i in range(len(rows[0][1]))]
    n_cols = len(header)
    if not rows and n_cols == 0:
        raise ParseError("empty CSV input")
    for row_no, row in rows:
        if len(row) != n_cols:
            raise ParseError(
                f"row has {len(row)} cells, expected {n_cols}", line=row_no)
        for cell in row:
            if cell == "":
                raise UnsupportedFeature("empty cell", line=row_no)

    if class_column is None:
        cls = n_cols - 1
    elif isinstance(class_column, str):
        try:
            cls = header.index(class_column)
        except ValueError:
            raise ParseError(f"no column named {class_column!r}") from None
    else:
        cls = class_column
        if not 0 <= cls < n_cols:
            raise ParseError(f"class column index {cls} out of range")

    columns = [[row[i] for _, row in rows] for i in range(n_cols)]
    schema = []
    parsed_cols = []
    for i, col in enumerate(columns):
        if i == cls:
            seen = {}
            for v in col:
                if v not in seen:
                    seen[v] = len(seen)
            if not seen:  # zero data rows: single placeholder value
                raise ParseError("CSV with a header but no data rows")
            schema.append(AttributeSchema(header[i], tuple(seen.keys())))
            parsed_cols.append([seen[v] for v in col])
        else:
            values, parsed = _infer_column(col)
            schema.append(AttributeSchema(header[i], values))
            parsed_cols.append(parsed)

    instances = []
    for r in range(len(rows)):
        values = [parsed_cols[c][r] for c in range(n_cols)]
        label = values.pop(cls)
        instances.append(Instance(tuple(values), label))
    return StreamDataset(tuple(schema), tuple(instances), cls)


def _format_value(attr: AttributeSchema, value) -> str:
    if attr.is_nominal:
        v = attr.values[value]
        return f"'{v}'" if ("," in v or " " in v) else v
    return repr(float(value))


def to_arff(ds: StreamDataset, relation: str = "stream") -> str:
    """Serialize a dataset back to dense ARFF; round-trips via parse_arff."""
    out = io.StringIO()
    out.write(f"@relation {relation}\n")
    for attr in ds.schema:
        name = f"'{attr.name}'" if " " in attr.name else attr.name
        if attr.is_nominal:
            vals = ",".join(f"'{v}'" if ("," in v or " " in v) else v
                            for v in attr.values)
            out.write(f"@attribute {name} {{{vals}}}\n")
        else:
            out.write(f"@attribute {name} numeric\n")
    out.write("@data\n")
    for inst in ds.instances:
        row = list(inst.features)
        row.insert(ds.class_index, inst.label)
        out.write(",".join(_format_value(a, v)
                           for a, v in zip(ds.schema, row)) + "\n")
    return out.getvalue()


def dataset_summary(ds: StreamDataset) -> dict:
    """Exact instance/feature/class counts for a dataset."""
    counts = {v: 0 for v in ds.class_values}
    for inst in ds.instances:
        counts[ds.class_values[inst.label]] += 1
    return {
        "n_instances": ds.n_instances,
        "n_features": ds.n_features,
        "class_values": list(ds.class_values),
        "class_counts": counts,
    }
