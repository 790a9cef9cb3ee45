"""Minimal CSV reading with descriptive errors for missing columns."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class MissingColumnError(KeyError):
    """A figure asked for a column the CSV does not provide."""


@dataclass(frozen=True)
class Table:
    path: str
    header: tuple[str, ...]
    data: np.ndarray  # shape (n_rows, n_columns)

    def col(self, name: str) -> np.ndarray:
        if name not in self.header:
            raise MissingColumnError(
                f"{self.path}: column {name!r} not found; available: {list(self.header)}"
            )
        return self.data[:, self.header.index(name)]


def read_table(path: str | Path) -> Table:
    """Read a cvqmap CSV (optionally starting with a '#' metadata line)."""
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    if not rows:
        raise ValueError(f"{path}: empty CSV")
    header = tuple(rows[0])
    data = np.array([[float(v) for v in r] for r in rows[1:]], dtype=float)
    if data.ndim != 2 or data.shape[1] != len(header):
        raise ValueError(f"{path}: ragged rows or header/data width mismatch")
    return Table(path=str(path), header=header, data=data)
