"""
Report rendering for verification and audit batches.

Three formats are supported:

* ``json`` – one object ``{"records": [...], "summary": {...}}`` with the
  record field names as keys, compact separators, trailing newline;
* ``csv`` – header row plus one row per record (pandas), ``None`` as an
  empty cell, booleans as ``true``/``false``, vertex lists space separated;
* ``human`` – a summary block followed by a fixed-width table.

Output depends only on the records, so identical batches produce
byte-identical reports.
"""

from __future__ import annotations

import json
import logging
from dataclasses import fields
from typing import Any, Iterable

import pandas as pd

from .verification import VerificationRecord

logger = logging.getLogger(__name__)

FORMAT_JSON = "json"
FORMAT_CSV = "csv"
FORMAT_HUMAN = "human"
FORMATS = (FORMAT_JSON, FORMAT_CSV, FORMAT_HUMAN)

# Columns shown by the human table for verification records.
HUMAN_COLUMNS = [
    "graph_id",
    "n",
    "m",
    "g",
    "kappa_g",
    "hypothesis_holds",
    "mu_kappa",
    "expected",
    "equality_holds",
    "upper_bound_holds",
    "status",
]


def _cell(value: Any) -> str:
    """Render one value for CSV / table output."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    return str(value)


def _frame(rows: list[dict[str, Any]], columns: list[str]) -> pd.DataFrame:
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    return pd.DataFrame(cells, columns=columns, dtype=str)


def _dumps(payload: Any) -> bytes:
    return (json.dumps(payload, separators=(",", ":"), ensure_ascii=False) + "\n").encode("utf-8")


def emit_report(
    records: Iterable,
    summary: dict[str, int],
    fmt: str = FORMAT_JSON,
    record_type: type = VerificationRecord,
) -> bytes:
    """Serialize a batch report.

    *record_type* fixes the column set (and order) even when *records* is
    empty.
    """
    if fmt not in FORMATS:
        raise ValueError(f"Unknown format {fmt!r}. Available: {', '.join(FORMATS)}")
    rows = [r.to_dict() for r in records]
    columns = [f.name for f in fields(record_type)]

    if fmt == FORMAT_JSON:
        return _dumps({"records": rows, "summary": summary})

    if fmt == FORMAT_CSV:
        return _frame(rows, columns).to_csv(index=False, lineterminator="\n").encode("utf-8")

    lines = ["Summary"]
    lines.extend(f"  {key:<34} {value}" for key, value in summary.items())
    if rows:
        shown = [c for c in HUMAN_COLUMNS if c in columns] or columns
        lines.append("")
        lines.append(_frame(rows, shown).to_string(index=False))
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit_object(payload: dict[str, Any], fmt: str = FORMAT_JSON) -> bytes:
    """Serialize a single result (graph, solve outcome, record)."""
    if fmt not in FORMATS:
        raise ValueError(f"Unknown format {fmt!r}. Available: {', '.join(FORMATS)}")
    if fmt == FORMAT_JSON:
        return _dumps(payload)
    if fmt == FORMAT_CSV:
        columns = list(payload)
        return _frame([payload], columns).to_csv(index=False, lineterminator="\n").encode("utf-8")
    width = max((len(k) for k in payload), default=0)
    text = "".join(f"{key:<{width}}  {_human(value)}\n" for key, value in payload.items())
    return text.encode("utf-8")


def _human(value: Any) -> str:
    if isinstance(value, dict):
        return json.dumps(value, separators=(", ", ": "), ensure_ascii=False)
    if isinstance(value, str) and "\n" in value:
        return "\n    " + value.rstrip("\n").replace("\n", "\n    ")
    return _cell(value) if value is not None else "-"
