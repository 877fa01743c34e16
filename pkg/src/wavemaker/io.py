"""CSV and JSON persistence.

All numeric CSV output is written with 17 significant digits so float64
values survive a write/read round trip bit for bit, and reruns of the same
configuration produce byte-identical files.

Formats:
    snapshot: header ``t,x,zeta,q``, one row per node at a single time
    trace:    header ``t,zeta,q``, one row per time step at a single node
    profile:  header ``xi,zeta,q``, solitary-wave profile on its own axis
    table:    header ``dx,e_zeta,order_zeta,e_q,order_q``; the order columns
              are empty in the first row (no coarser run to compare with)
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .core import BoundaryForcing
from .errors import CsvFormatError

SNAPSHOT_HEADER = ("t", "x", "zeta", "q")
TRACE_HEADER = ("t", "zeta", "q")
PROFILE_HEADER = ("xi", "zeta", "q")
TABLE_HEADER = ("dx", "e_zeta", "order_zeta", "e_q", "order_q")


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _write_rows(path, header: Sequence[str], columns: Sequence[np.ndarray]) -> None:
    lengths = {len(c) for c in columns}
    if len(lengths) != 1:
        raise ValueError(f"column lengths differ: {sorted(lengths)}")
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in zip(*columns):
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _read_rows(path, header: Sequence[str]) -> list[np.ndarray]:
    path = Path(path)
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            first = next(reader)
        except StopIteration:
            raise CsvFormatError(f"{path}:1: empty file") from None
        if [c.strip() for c in first] != list(header):
            raise CsvFormatError(
                f"{path}:1: expected header {','.join(header)!r}, got {','.join(first)!r}"
            )
        columns: list[list[float]] = [[] for _ in header]
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise CsvFormatError(
                    f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}"
                )
            for col, cell in zip(columns, row):
                try:
                    col.append(float(cell) if cell.strip() else np.nan)
                except ValueError:
                    raise CsvFormatError(
                        f"{path}:{lineno}: non-numeric value {cell!r}"
                    ) from None
    if not columns[0]:
        raise CsvFormatError(f"{path}:2: no data rows")
    return [np.asarray(col, dtype=float) for col in columns]


def write_snapshot(path, t: float, x: np.ndarray, zeta: np.ndarray, q: np.ndarray) -> None:
    """Write the fields at one instant, one row per node."""
    t_col = np.full(len(np.asarray(x)), float(t))
    _write_rows(path, SNAPSHOT_HEADER, [t_col, np.asarray(x), np.asarray(zeta), np.asarray(q)])


def read_snapshot(path) -> tuple[float, np.ndarray, np.ndarray, np.ndarray]:
    """Read a snapshot; returns (t, x, zeta, q)."""
    t_col, x, zeta, q = _read_rows(path, SNAPSHOT_HEADER)
    if np.any(t_col != t_col[0]):
        raise CsvFormatError(f"{path}: snapshot rows carry different times")
    return float(t_col[0]), x, zeta, q


def write_trace(path, t: np.ndarray, zeta: np.ndarray, q: np.ndarray) -> None:
    """Write a per-step record of the fields at one node."""
    _write_rows(path, TRACE_HEADER, [np.asarray(t), np.asarray(zeta), np.asarray(q)])


def read_trace_arrays(path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    t, zeta, q = _read_rows(path, TRACE_HEADER)
    return t, zeta, q


def read_trace(path) -> BoundaryForcing:
    """Read a trace CSV as sampled boundary forcing (elevation column)."""
    t, zeta, _ = read_trace_arrays(path)
    return BoundaryForcing.from_samples(t, zeta)


def write_profile(path, xi: np.ndarray, zeta: np.ndarray, q: np.ndarray) -> None:
    _write_rows(path, PROFILE_HEADER, [np.asarray(xi), np.asarray(zeta), np.asarray(q)])


def read_profile(path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    xi, zeta, q = _read_rows(path, PROFILE_HEADER)
    return xi, zeta, q


def write_table(path, rows: Iterable[tuple]) -> None:
    """Write convergence-table rows (dx, e_zeta, order_zeta, e_q, order_q).

    Order entries may be None (first row), which becomes an empty field.
    """
    with open(path, "w", newline="") as fh:
        fh.write(",".join(TABLE_HEADER) + "\n")
        for row in rows:
            if len(row) != 5:
                raise ValueError(f"table rows need 5 fields, got {len(row)}")
            fh.write(",".join("" if v is None else _fmt(v) for v in row) + "\n")


def read_table(path) -> tuple[np.ndarray, ...]:
    """Read a convergence table; missing orders come back as nan."""
    return tuple(_read_rows(path, TABLE_HEADER))


def write_summary(path, payload: dict) -> None:
    """Write the run summary JSON (parameters, wall time, warnings)."""
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
