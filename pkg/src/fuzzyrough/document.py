"""
Relation documents.

JSON form::

    {"name": "R", "universe": ["a", "b"], "mu": [["1", "0.5"], ["0.5", "1"]]}

CSV form: a header row of labels (first cell is a corner label or blank),
then one row per element, prefixed by its label. Numbers written without
quotes in JSON are read from their decimal text, so they stay exact too.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Optional

from .core import Universe, format_degree, parse_degree
from .errors import DimensionMismatch, ParseError
from .relation import FuzzyRelation


def parse_relation(text: str) -> FuzzyRelation:
    relation, _ = parse_document(text)
    return relation


def parse_document(text: str) -> tuple[FuzzyRelation, Optional[str]]:
    """Parse JSON or CSV text; returns the relation and its optional name."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_csv(text)


def _parse_json(text: str) -> tuple[FuzzyRelation, Optional[str]]:
    try:
        doc = json.loads(text, parse_float=str, parse_int=str)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", "document")
    for key in ("universe", "mu"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}", "document")
    labels = doc["universe"]
    if not isinstance(labels, list) or not labels or not all(isinstance(x, str) for x in labels):
        raise ParseError("universe must be a nonempty list of strings", "universe")
    try:
        universe = Universe(labels)
    except ValueError as exc:
        raise ParseError(str(exc), "universe") from None
    grid = doc["mu"]
    n = len(labels)
    if not isinstance(grid, list) or len(grid) != n:
        raise DimensionMismatch(f"mu must have {n} rows", "mu")
    rows = []
    for i, row in enumerate(grid):
        if not isinstance(row, list) or len(row) != n:
            raise DimensionMismatch(f"row must have {n} entries", f"mu[{i}]")
        rows.append(tuple(parse_degree(v, f"mu[{i}][{j}]") for j, v in enumerate(row)))
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("name must be a string", "name")
    return FuzzyRelation(universe, tuple(rows)), name


def _parse_csv(text: str) -> tuple[FuzzyRelation, Optional[str]]:
    table = [row for row in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in row)]
    if not table:
        raise ParseError("empty document", "line 1")
    header = [cell.strip() for cell in table[0]]
    corner, labels = header[0], header[1:]
    if not labels:
        raise ParseError("header row needs element labels", "row 1")
    try:
        universe = Universe(labels)
    except ValueError as exc:
        raise ParseError(str(exc), "row 1") from None
    n = len(labels)
    body = table[1:]
    if len(body) != n:
        raise DimensionMismatch(f"expected {n} data rows, found {len(body)}", "document")
    rows = []
    for r, row in enumerate(body, start=2):
        if len(row) != n + 1:
            raise DimensionMismatch(f"expected a label and {n} degrees", f"row {r}")
        label = row[0].strip()
        if label != labels[r - 2]:
            raise ParseError(f"row label {label!r} should be {labels[r - 2]!r}", f"row {r}, column 1")
        rows.append(tuple(parse_degree(v, f"row {r}, column {c}") for c, v in enumerate(row[1:], start=2)))
    return FuzzyRelation(universe, tuple(rows)), corner or None


def emit_relation(relation: FuzzyRelation, name: Optional[str] = None) -> str:
    """Canonical JSON text; ``parse_relation(emit_relation(r)) == r``."""
    lines = ["{"]
    if name is not None:
        lines.append(f"  \"name\": {json.dumps(name)},")
    lines.append(f"  \"universe\": {json.dumps(list(relation.universe.elements))},")
    rows = [json.dumps([format_degree(v) for v in row]) for row in relation.mu]
    lines.append("  \"mu\": [")
    lines.append(",\n".join(f"    {row}" for row in rows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_csv(relation: FuzzyRelation, name: str = "") -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([name, *relation.universe.elements])
    for label, row in zip(relation.universe.elements, relation.mu):
        writer.writerow([label, *(format_degree(v) for v in row)])
    return out.getvalue()
