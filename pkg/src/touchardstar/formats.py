"""Canonical machine-readable rendering shared by the CLI and tests.

JSON output is canonical (sorted keys, fixed separators), so parsing and
re-emitting any payload reproduces it byte for byte.  CSV rows use the csv
module with a bare newline terminator; float cells use repr, the shortest
round-trip form.
"""

from __future__ import annotations

import csv
import io
import json


def canonical_json(obj) -> str:
    """Deterministic single-line JSON rendering of a payload."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False)


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(float(v))  # plain float repr even for numpy scalars
    return str(v)


def one_line_csv(fieldnames, record: dict) -> str:
    """Header plus a single data row for one result object."""
    return rows_csv(fieldnames, [record])


def rows_csv(fieldnames, records) -> str:
    """Header plus one row per record, in the given field order."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fieldnames)
    for record in records:
        writer.writerow([_cell(record.get(f)) for f in fieldnames])
    return buf.getvalue()


def human_lines(record: dict) -> str:
    """Key: value lines, in the record's own order."""
    return "".join(f"{k}: {_cell(v) if not isinstance(v, (list, dict)) else v}\n"
                   for k, v in record.items())
