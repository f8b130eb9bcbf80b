"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Reading and writing the .idx index set format."""

from bhlab.bhindex.indexset import IndexSet
from bhlab.bhutils.utils.constants import MAX_INDEX
from bhlab.bhutils.utils.exceptions import IndexParseError
from bhlab.bhutils.utils.filesystemreader import FileSystemReaderWriter

LABEL_PREFIX = "# label:"


def parse_index_set(text, label=None):
    """
    Parse .idx text: a `m <int>` header, then one slot-ordered tuple per line.
    """
    m = None
    tuples = []
    seen = {}
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        stripped = raw_line.strip()
        if stripped.startswith(LABEL_PREFIX) and m is None and label is None:
            label = stripped[len(LABEL_PREFIX):].strip() or None
        line = raw_line.split("#", 1)[0].strip()
        if line == "":
            continue
        fields = line.split()
        if m is None:
            if len(fields) != 2 or fields[0] != "m":
                raise IndexParseError(line_number, "expected header 'm <int>'")
            m = _parse_int_(fields[1], line_number)
            continue
        if len(fields) != m:
            raise IndexParseError(line_number, "arity mismatch, expected %d entries, got %d" % (m, len(fields)))
        entries = tuple(_parse_int_(value, line_number) for value in fields)
        key = tuple(sorted(entries))
        if key in seen:
            raise IndexParseError(line_number, "duplicate monomial %s (first seen at line %d)"
                                  % (key, seen[key]))
        seen[key] = line_number
        tuples.append(entries)
    if m is None:
        raise IndexParseError(0, "missing header 'm <int>'")
    return IndexSet(m, tuples, label=label)


def _parse_int_(value, line_number):
    try:
        number = int(value)
    except ValueError:
        raise IndexParseError(line_number, "malformed integer %r" % value)
    if number < 1:
        raise IndexParseError(line_number, "index %d is not positive" % number)
    if number > MAX_INDEX:
        raise IndexParseError(line_number, "index %d does not fit in 64 bits" % number)
    return number


def serialize_index_set(index_set):
    """
    Render an index set as .idx text, tuples in lexicographic order of raw entries.
    """
    lines = []
    if index_set.label:
        lines.append("%s %s\n" % (LABEL_PREFIX, index_set.label))
    lines.append("m %d\n" % index_set.m)
    for entries in index_set.tuples:
        lines.append(" ".join(str(entry) for entry in entries) + "\n")
    return "".join(lines)


def read_index_set(path):
    return parse_index_set(FileSystemReaderWriter(path).read_text())


def write_index_set(index_set, path):
    FileSystemReaderWriter(path).overwrite_with_line(serialize_index_set(index_set))
