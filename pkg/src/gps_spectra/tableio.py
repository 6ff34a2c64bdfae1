"""CSV and JSON emitters with stable 12-significant-digit formatting.

Emitted CSV round-trips: parsing a file and re-emitting it reproduces the
bytes exactly, because every numeric cell is printed with the same fixed
formatter and parsing a 12-digit decimal recovers a double that formats back
to the same string.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

VERSION_COMMENT = "# gps-spectra v1"


def format_value(x) -> str:
    """Format a number to 12 significant digits ('.' separator, no sign noise)."""
    if isinstance(x, str):
        return x
    x = float(x)
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return f"{x:.12g}"


@dataclass
class Table:
    """In-memory form of one delimited output: comments, header, rows, footers."""

    header: list[str]
    rows: list[list] = field(default_factory=list)
    pre_comments: list[str] = field(default_factory=list)
    post_comments: list[str] = field(default_factory=list)


def render_csv(table: Table) -> str:
    """Serialize with the version comment first and LF line endings."""
    lines = [VERSION_COMMENT]
    lines.extend(table.pre_comments)
    lines.append(",".join(table.header))
    for row in table.rows:
        lines.append(",".join(format_value(cell) for cell in row))
    lines.extend(table.post_comments)
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> Table:
    """Parse a CSV emitted by render_csv; numeric cells become floats."""
    lines = text.splitlines()
    if not lines or lines[0] != VERSION_COMMENT:
        raise ValueError(f"missing version comment {VERSION_COMMENT!r}")
    pre, header, rows, post = [], None, [], []
    for line in lines[1:]:
        if line.startswith("#"):
            (post if header is not None else pre).append(line)
            continue
        cells = line.split(",")
        if header is None:
            header = cells
            continue
        if post:
            raise ValueError("data row after footer comments")
        parsed = []
        for cell in cells:
            try:
                parsed.append(float(cell))
            except ValueError:
                parsed.append(cell)
        rows.append(parsed)
    if header is None:
        raise ValueError("no header line found")
    return Table(header=header, rows=rows, pre_comments=pre, post_comments=post)


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    # floats go through the fixed formatter so JSON output is stable too
    return float(format_value(x))


def render_json(numerics: dict, results: list, extra: dict | None = None) -> str:
    """JSON mirror: a top-level results array plus a numerics object."""
    doc = {"numerics": _jsonable(numerics), "results": _jsonable(results)}
    if extra:
        doc.update(_jsonable(extra))
    return json.dumps(doc, indent=2) + "\n"
