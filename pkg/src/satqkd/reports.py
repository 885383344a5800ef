"""Tabular report values with byte-stable serialization.

Every float is quantized to 9 significant digits when the report is
built, so writing and re-reading a report (CSV or JSON) reproduces it
exactly, and identical inputs always produce byte-identical files.
Cells are strings, ints, floats, or None (an empty CSV cell).
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path


def quantize(value: float) -> float:
    """Round to 9 significant digits, the report precision."""
    return float(f"{value:.9g}")


def _cell(value):
    if value is None or isinstance(value, (str, int)) and not isinstance(value, bool):
        return value
    if isinstance(value, float):
        return quantize(value)
    raise TypeError(f"unsupported report cell type {type(value).__name__}: {value!r}")


@dataclass(frozen=True)
class Report:
    name: str
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", tuple(self.columns))
        rows = tuple(tuple(_cell(v) for v in row) for row in self.rows)
        for row in rows:
            if len(row) != len(self.columns):
                raise ValueError(
                    f"report {self.name!r}: row of width {len(row)}, "
                    f"expected {len(self.columns)}"
                )
        object.__setattr__(self, "rows", rows)


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def _parse_cell(text: str):
    if text == "":
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def write_report(report: Report, out_dir, fmt: str = "csv") -> Path:
    """Write one report file and return its path."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    if fmt == "csv":
        path = out_dir / f"{report.name}.csv"
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(report.columns)
            for row in report.rows:
                writer.writerow([_format_cell(v) for v in row])
    elif fmt == "json":
        path = out_dir / f"{report.name}.json"
        payload = {
            "name": report.name,
            "columns": list(report.columns),
            "rows": [list(row) for row in report.rows],
        }
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=1, allow_nan=False)
            fh.write("\n")
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    return path


def read_report(path) -> Report:
    """Re-parse a written report; inverse of write_report for both formats."""
    path = Path(path)
    if path.suffix == ".json":
        with open(path) as fh:
            payload = json.load(fh)
        return Report(
            name=payload["name"],
            columns=tuple(payload["columns"]),
            rows=tuple(tuple(row) for row in payload["rows"]),
        )
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = tuple(tuple(_parse_cell(c) for c in row) for row in reader)
    return Report(name=path.stem, columns=tuple(header), rows=rows)
