"""Tabular data model: relations over a named schema with tuple ids.

Cells are untyped strings compared byte-exactly; NULL is represented by
``None``. Each row carries a tuple id (tid) that is unique within a
relation and is never treated as a repairable attribute.
"""

import csv
from collections import Counter


class SchemaError(ValueError):
    """An attribute name is unknown or the schema is malformed."""


class Schema:
    """An ordered list of attribute names with stable indices."""

    def __init__(self, attributes):
        attributes = list(attributes)
        if len(set(attributes)) != len(attributes):
            raise SchemaError("duplicate attribute names: %r" % (attributes,))
        self.attributes = attributes
        self._index = {a: i for i, a in enumerate(attributes)}

    def __len__(self):
        return len(self.attributes)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, Schema) and self.attributes == other.attributes

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise SchemaError("unknown attribute %r" % (name,)) from None

    def indices(self, names):
        return [self.index(n) for n in names]


class Relation:
    """An ordered collection of rows with unique tids.

    ``rows`` is a list of cell lists aligned with ``schema.attributes``;
    ``tids`` is the parallel list of tuple ids.
    """

    def __init__(self, schema, tids=None, rows=None):
        self.schema = schema
        self.tids = list(tids) if tids else []
        self.rows = [list(r) for r in rows] if rows else []
        if len(self.tids) != len(self.rows):
            raise ValueError("tids and rows must have equal length")
        if len(set(self.tids)) != len(self.tids):
            raise ValueError("duplicate tids")
        for row in self.rows:
            if len(row) != len(schema):
                raise SchemaError("row arity %d does not match schema arity %d"
                                  % (len(row), len(schema)))
        self._pos = {tid: i for i, tid in enumerate(self.tids)}

    def __len__(self):
        return len(self.rows)

    def append(self, tid, row):
        if tid in self._pos:
            raise ValueError("duplicate tid %r" % (tid,))
        if len(row) != len(self.schema):
            raise SchemaError("row arity %d does not match schema arity %d"
                              % (len(row), len(self.schema)))
        self._pos[tid] = len(self.tids)
        self.tids.append(tid)
        self.rows.append(list(row))

    def copy(self):
        return Relation(self.schema, self.tids, self.rows)

    def row_of(self, tid):
        try:
            return self.rows[self._pos[tid]]
        except KeyError:
            raise KeyError("unknown tid %r" % (tid,)) from None

    def get(self, tid, attr):
        return self.row_of(tid)[self.schema.index(attr)]

    def set(self, tid, attr, value):
        self.row_of(tid)[self.schema.index(attr)] = value

    def column(self, attr):
        i = self.schema.index(attr)
        return [row[i] for row in self.rows]

    def project(self, attrs):
        """Duplicate-free set of value vectors restricted to ``attrs``."""
        idx = self.schema.indices(attrs)
        return {tuple(row[i] for i in idx) for row in self.rows}

    def bag_project(self, attrs):
        """Multiset of value vectors restricted to ``attrs``."""
        idx = self.schema.indices(attrs)
        return Counter(tuple(row[i] for i in idx) for row in self.rows)

    def select_by_tids(self, tids):
        """Subrelation with exactly the requested tuples, in original order."""
        wanted = set(tids)
        unknown = wanted - self._pos.keys()
        if unknown:
            raise KeyError("unknown tids %r" % (sorted(unknown),))
        sub = Relation(self.schema)
        for tid, row in zip(self.tids, self.rows):
            if tid in wanted:
                sub.append(tid, row)
        return sub


def load_csv(path, null_token="", tid_column=None):
    """Read a relation from a headered CSV file.

    Cells equal to ``null_token`` become NULL. If ``tid_column`` is given,
    that column supplies the tids (unique integers); otherwise tids are
    assigned 1..n in row order.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError("%s: empty file, expected a header row" % path) from None
        tid_idx = None
        if tid_column is not None:
            if tid_column not in header:
                raise SchemaError("tid column %r not in header" % (tid_column,))
            tid_idx = header.index(tid_column)
            header = header[:tid_idx] + header[tid_idx + 1:]
        rel = Relation(Schema(header))
        for lineno, raw in enumerate(reader, start=2):
            if len(raw) != len(header) + (1 if tid_idx is not None else 0):
                raise ValueError("%s:%d: expected %d fields, got %d"
                                 % (path, lineno, len(header) + (tid_idx is not None), len(raw)))
            if tid_idx is not None:
                try:
                    tid = int(raw[tid_idx])
                except ValueError:
                    raise ValueError("%s:%d: malformed tid %r" % (path, lineno, raw[tid_idx])) from None
                raw = raw[:tid_idx] + raw[tid_idx + 1:]
            else:
                tid = lineno - 1
            row = [None if cell == null_token else cell for cell in raw]
            try:
                rel.append(tid, row)
            except ValueError:
                raise ValueError("%s:%d: duplicate tid %r" % (path, lineno, tid)) from None
        return rel


def save_csv(rel, path, null_token="", tid_column=None):
    """Write a relation to CSV; NULL cells are emitted as ``null_token``.

    With ``tid_column`` the tids are written as a leading column, so that
    ``load_csv(..., tid_column=...)`` reproduces the relation exactly.
    """
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        if tid_column is None:
            writer.writerow(rel.schema.attributes)
            for row in rel.rows:
                writer.writerow([null_token if c is None else c for c in row])
        else:
            writer.writerow([tid_column] + rel.schema.attributes)
            for tid, row in zip(rel.tids, rel.rows):
                writer.writerow([tid] + [null_token if c is None else c for c in row])
