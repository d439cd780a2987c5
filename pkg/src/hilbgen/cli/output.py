"""CSV and JSON rendering of command results.

Exact integers are decimal strings.  Real numbers are strings with 17
significant digits (mpmath values may lie far outside double range) and
every document carries the working precision.
"""

from __future__ import annotations

import csv
import io
import json
from importlib import resources

import mpmath

from .commands import Table
from .config import RunConfig
from .verify import CheckResult

SIGNIFICANT_DIGITS = 17


def format_value(value) -> str | None:
    if value is None:
        return None
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, str)):
        return str(value)
    if isinstance(value, float):
        return format(value, f".{SIGNIFICANT_DIGITS}g")
    return mpmath.nstr(value, SIGNIFICANT_DIGITS, strip_zeros=False)


def table_document(table: Table, cfg: RunConfig) -> dict:
    return {
        "command": table.command,
        "precision_bits": cfg.precision_bits,
        "config": cfg.as_dict(),
        "columns": list(table.columns),
        "rows": [{c: format_value(row.as_dict()[c]) for c in table.columns} for row in table.rows],
        "summary": [{k: format_value(v) for k, v in entry.items()} for entry in table.summary],
    }


def verify_document(results: list[CheckResult], cfg: RunConfig) -> dict:
    return {
        "command": "verify",
        "precision_bits": cfg.precision_bits,
        "config": cfg.as_dict(),
        "passed": all(r.passed for r in results),
        "checks": [r.as_dict() for r in results],
    }


def render_json(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"


def render_csv(document: dict) -> str:
    """Header plus one record per row; summary lines follow, prefixed with '#'."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if document["command"] == "verify":
        writer.writerow(["key", "name", "passed", "detail"])
        for check in document["checks"]:
            writer.writerow([check["key"], check["name"], format_value(check["passed"]), check["detail"]])
        return buf.getvalue()
    columns = document["columns"]
    writer.writerow(columns)
    for row in document["rows"]:
        writer.writerow(["" if row[c] is None else row[c] for c in columns])
    for entry in document["summary"]:
        buf.write("# " + " ".join(f"{k}={'' if v is None else v}" for k, v in entry.items()) + "\n")
    return buf.getvalue()


def load_schema() -> dict:
    """The JSON schema every ``--format json`` document validates against."""
    text = resources.files("hilbgen.cli").joinpath("schemas/report.schema.json").read_text()
    return json.loads(text)
