"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Reading and writing the .poly polynomial format."""

import math

from bhlab.bhindex.indexset import exponent_to_tuple, tuple_to_exponent
from bhlab.bhpoly.polynomial import SparsePolynomial
from bhlab.bhutils.utils.constants import MAX_INDEX
from bhlab.bhutils.utils.exceptions import PolyParseError
from bhlab.bhutils.utils.filesystemreader import FileSystemReaderWriter
from bhlab.bhutils.utils.utils import format_real


def parse_poly(text):
    """
    Parse .poly text: a `m <int>` header, then `re im i1 ... im` per term.
    """
    m = None
    terms = {}
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if line == "":
            continue
        fields = line.split()
        if m is None:
            if len(fields) != 2 or fields[0] != "m":
                raise PolyParseError(line_number, "expected header 'm <int>'")
            try:
                m = int(fields[1])
            except ValueError:
                raise PolyParseError(line_number, "malformed degree %r" % fields[1])
            if m < 1:
                raise PolyParseError(line_number, "degree must be positive")
            continue
        if len(fields) != m + 2:
            raise PolyParseError(line_number, "expected %d fields, got %d" % (m + 2, len(fields)))
        real, imag = (_parse_real_(value, line_number) for value in fields[:2])
        entries = tuple(_parse_index_(value, line_number) for value in fields[2:])
        alpha = tuple_to_exponent(entries)
        if alpha in terms:
            raise PolyParseError(line_number, "duplicate monomial %s" % (tuple(sorted(entries)),))
        terms[alpha] = complex(real, imag)
    if m is None:
        raise PolyParseError(0, "missing header 'm <int>'")
    return SparsePolynomial(m, terms)


def _parse_real_(value, line_number):
    try:
        number = float(value)
    except ValueError:
        raise PolyParseError(line_number, "malformed real %r" % value)
    if not math.isfinite(number):
        raise PolyParseError(line_number, "coefficient %r is not finite" % value)
    return number


def _parse_index_(value, line_number):
    try:
        number = int(value)
    except ValueError:
        raise PolyParseError(line_number, "malformed integer %r" % value)
    if not 1 <= number <= MAX_INDEX:
        raise PolyParseError(line_number, "index %d out of range" % number)
    return number


def serialize_poly(P):
    lines = ["m %d\n" % P.m]
    for alpha, coefficient in P.terms.items():
        fields = [format_real(coefficient.real), format_real(coefficient.imag)]
        fields.extend(str(var) for var in exponent_to_tuple(alpha))
        lines.append(" ".join(fields) + "\n")
    return "".join(lines)


def read_poly(path):
    return parse_poly(FileSystemReaderWriter(path).read_text())


def write_poly(P, path):
    FileSystemReaderWriter(path).overwrite_with_line(serialize_poly(P))
