"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Tables for everything BHLab prints: profiles, bounds, step margins."""

import csv
import io

from collections import Counter

import pandas as pd
import prettytable


def unique_columns(columns):
    """
    Suffix repeated column names with _1, _2, ... in order of appearance.
    """
    seen = Counter()
    taken = set()
    result = []
    for name in columns:
        candidate = name
        while candidate in taken:
            seen[name] += 1
            candidate = "%s_%d" % (name, seen[name])
        taken.add(candidate)
        result.append(candidate)
    return result


class ResultSet(list):
    """
    Rows of a result table, rendered with prettytable in the terminal and as
    HTML in notebooks. Indexing with a string looks a row up by its first column.

    Credits: Thanks to 'Ipython-sql' for ResultSet.
    """

    def __init__(self, columns, data, displaylimit=100, title=None):
        list.__init__(self, [tuple(row) for row in data])
        self.keys = list(columns)
        self.field_names = unique_columns(self.keys)
        self.displaylimit = displaylimit
        self.title = title
        self.pretty = prettytable.PrettyTable(self.field_names)
        self.pretty.align = "r"
        for row in self.shown():
            self.pretty.add_row(list(row))

    def shown(self):
        return self[:self.displaylimit] if self.displaylimit else list(self)

    def __getitem__(self, key):
        if not isinstance(key, str):
            return list.__getitem__(self, key)
        matches = [row for row in self if row[0] == key]
        if len(matches) != 1:
            raise KeyError(key if not matches else '%d rows for "%s"' % (len(matches), key))
        return matches[0]

    def __str__(self):
        text = self.pretty.get_string()
        return "%s\n%s" % (self.title, text) if self.title else text

    def _repr_html_(self):
        html = self.pretty.get_html_string()
        if self.title:
            html = "<b>%s</b>\n%s" % (self.title, html)
        hidden = len(self) - len(self.shown())
        if hidden > 0:
            html += '\n<span style="font-style:italic;">%d of %d rows shown (displaylimit)</span>' % (
                len(self) - hidden, len(self))
        return html

    def DataFrame(self):
        return pd.DataFrame(list(self), columns=self.field_names)

    def csv(self, filename=None):
        """
        Header plus one line per row, `\\n` terminated. Also written to `filename` if given.
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.field_names)
        writer.writerows(self)
        text = buffer.getvalue()
        if filename:
            with open(filename, "w", newline="", encoding="utf-8") as handle:
                handle.write(text)
        return text
