"""Delimited time-series ingestion and CSV export of window results.

All writers emit ``\n`` line endings and fixed numeric formats so that
identical inputs give byte-identical files on every platform.
Quantifiers are printed with 6 decimal places; raw series values are
written with ``repr`` so a round trip through disk is lossless.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    InsufficientDataError,
    InvalidInputError,
    MissingColumnError,
    NoParseableRowsError,
)
from .windows import WindowResult

WINDOW_CSV_HEADER = "window_id,start_label,end_label,H,F,E"
PLANE_CSV_HEADER = "window_id,H,F"


@dataclass
class SeriesTable:
    """One label column plus one or more numeric columns of equal length.

    Missing or unparseable values are stored as NaN; downstream PDF
    estimation skips any pattern window that touches them.
    """

    labels: list[str]
    columns: dict[str, np.ndarray]
    source: str = ""

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise InvalidInputError("labels must be unique")
        for name, values in self.columns.items():
            values = np.asarray(values, dtype=float)
            if values.ndim != 1 or values.size != n:
                raise InvalidInputError(
                    f"column {name!r} has {values.size} values for {n} labels"
                )
            self.columns[name] = values

    def __len__(self) -> int:
        return len(self.labels)


def load_csv(
    path,
    label_column: str | None = None,
    value_columns: Sequence[str] | None = None,
    delimiter: str = ",",
) -> SeriesTable:
    """Read a header-bearing delimited file into a SeriesTable.

    Parameters
    ----------
    path : str or Path
        File to read.  A missing file raises FileNotFoundError.
    label_column : str, optional
        Name of the timestamp/ordinal column; defaults to the first
        column in the header.
    value_columns : sequence of str, optional
        Numeric columns to keep; defaults to every non-label column.
    delimiter : str
        Field separator, comma by default.

    Cells that do not parse as a float are recorded as missing (NaN)
    for that column.  A file with a header but no usable values raises
    NoParseableRowsError; a requested column absent from the header
    raises MissingColumnError.
    """
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle, delimiter=delimiter)
        try:
            header = next(reader)
        except StopIteration:
            raise NoParseableRowsError(f"{path}: file is empty") from None
        header = [name.strip() for name in header]
        if label_column is None:
            label_column = header[0]
        if label_column not in header:
            raise MissingColumnError(f"{path}: no column named {label_column!r}")
        if value_columns is None:
            value_columns = [name for name in header if name != label_column]
        for name in value_columns:
            if name not in header:
                raise MissingColumnError(f"{path}: no column named {name!r}")
        if not value_columns:
            raise MissingColumnError(f"{path}: no value columns to read")
        label_pos = header.index(label_column)
        value_pos = {name: header.index(name) for name in value_columns}

        labels: list[str] = []
        cells: dict[str, list[float]] = {name: [] for name in value_columns}
        for row in reader:
            if not row or all(not f.strip() for f in row):
                continue  # blank line
            labels.append(row[label_pos].strip() if label_pos < len(row) else "")
            for name, pos in value_pos.items():
                cells[name].append(_parse_cell(row[pos] if pos < len(row) else ""))

    if not labels:
        raise NoParseableRowsError(f"{path}: no data rows")
    columns = {name: np.array(vals, dtype=float) for name, vals in cells.items()}
    if all(np.isnan(col).all() for col in columns.values()):
        raise NoParseableRowsError(f"{path}: no cell parsed as a number")
    return SeriesTable(labels=labels, columns=columns, source=str(path))


def _parse_cell(text: str) -> float:
    try:
        value = float(text.strip())
    except ValueError:
        return float("nan")
    return value


def export_window_csv(results: Sequence[WindowResult], path) -> Path:
    """Write one row per window: id, start/end labels and the quantifiers.

    Quantifiers carry 6 decimal places.  Windows without labels fall
    back to their sample offsets (start index and last included index).
    Empty result lists raise before any file is created.
    """
    if not results:
        raise InsufficientDataError("no window results to export")
    path = Path(path)
    lines = [WINDOW_CSV_HEADER]
    for r in results:
        start = r.start_label if r.start_label is not None else str(r.start_idx)
        end = r.end_label if r.end_label is not None else str(r.end_idx - 1)
        p = r.point
        lines.append(
            f"{r.window_id},{start},{end},{p.entropy:.6f},{p.fisher:.6f},{p.efficiency:.6f}"
        )
    path.write_bytes(("\n".join(lines) + "\n").encode("utf-8"))
    return path


def export_plane_csv(results: Sequence[WindowResult], path) -> Path:
    """Write per-window scatter data for entropy/Fisher plane plots."""
    if not results:
        raise InsufficientDataError("no window results to export")
    path = Path(path)
    lines = [PLANE_CSV_HEADER]
    for r in results:
        lines.append(f"{r.window_id},{r.point.entropy:.6f},{r.point.fisher:.6f}")
    path.write_bytes(("\n".join(lines) + "\n").encode("utf-8"))
    return path


def write_series_csv(
    path,
    labels: Sequence[str],
    columns: Mapping[str, np.ndarray],
    label_column: str = "t",
) -> Path:
    """Write raw series columns with lossless float formatting."""
    path = Path(path)
    names = list(columns)
    if not names:
        raise InvalidInputError("need at least one column to write")
    width = len(labels)
    for name in names:
        if len(columns[name]) != width:
            raise InvalidInputError(f"column {name!r} length does not match labels")
    lines = [label_column + "," + ",".join(names)]
    for i, label in enumerate(labels):
        values = ",".join(repr(float(columns[name][i])) for name in names)
        lines.append(f"{label},{values}")
    path.write_bytes(("\n".join(lines) + "\n").encode("utf-8"))
    return path
