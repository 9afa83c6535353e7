"""CSV / JSON serialisation of experiment tables."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict
from pathlib import Path

from .experiment import COLUMNS, Row


def render(rows: list[Row], fmt: str = "csv") -> str:
    if not rows:
        raise ValueError("cannot emit an empty table")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in rows:
            writer.writerow([getattr(row, c) for c in COLUMNS])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([{c: asdict(row)[c] for c in COLUMNS} for row in rows], indent=1) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def emit_report(rows: list[Row], path: str | Path, fmt: str = "csv") -> Path:
    path = Path(path)
    path.write_text(render(rows, fmt))
    return path


def parse(text: str, fmt: str = "csv") -> list[Row]:
    if fmt == "csv":
        records = list(csv.DictReader(io.StringIO(text)))
    elif fmt == "json":
        records = json.loads(text)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return [
        Row(
            int(rec["r"]),
            int(rec["n"]),
            int(rec["trial"]),
            int(rec["seed"]),
            str(rec["method"]),
            int(rec["size"]),
            float(rec["elapsed_ms"]),
        )
        for rec in records
    ]


def load_report(path: str | Path, fmt: str | None = None) -> list[Row]:
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix.lower() == ".json" else "csv"
    return parse(path.read_text(), fmt)
