"""Readers for the triqubit CSV/report contract.

Every reader validates the header and fails loudly, naming the file and the
missing columns; figure code never recomputes physics, it only draws what
the run directory provides.
"""

from __future__ import annotations

import csv
import glob
import os

import numpy as np


class FigureDataError(Exception):
    """Missing file, missing column, or empty table."""


def read_table(path: str, required: tuple, allow_empty: bool = False) -> dict:
    """CSV -> dict of numpy arrays (floats where possible, else strings).

    ``allow_empty`` admits header-only tables (e.g. an event log of a locked
    trajectory that produced no events); everything else fails loudly.
    """
    if not os.path.exists(path):
        raise FigureDataError(f"missing input file: {path}")
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise FigureDataError(f"{path}: empty file") from None
        missing = [name for name in required if name not in header]
        if missing:
            raise FigureDataError(f"{path}: missing column(s) {missing}; "
                                  f"found {header}")
        rows = list(reader)
    if not rows:
        if allow_empty:
            return {name: np.empty(0) for name in header}
        raise FigureDataError(f"{path}: no data rows")
    columns = {}
    for idx, name in enumerate(header):
        values = [row[idx] for row in rows]
        try:
            columns[name] = np.array([float(v) for v in values])
        except ValueError:
            columns[name] = np.array(values)
    return columns


def read_values_with_markers(column: np.ndarray) -> np.ndarray:
    """Numeric column where infeasible cells carry the 'INF' marker -> NaN."""
    if column.dtype.kind == "f":
        return column
    out = np.empty(column.size)
    for k, value in enumerate(column):
        out[k] = np.nan if value == "INF" else float(value)
    return out


def read_geometry(path: str) -> dict:
    if not os.path.exists(path):
        raise FigureDataError(f"missing geometry report: {path}")
    values = {}
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            key, _, value = line.partition("=")
            values[key.strip()] = float(value.strip())
    if not values:
        raise FigureDataError(f"{path}: empty geometry report")
    return values


def tagged_files(run_dir: str, pattern: str) -> dict:
    """{tag: path} for files like trajectories_xi_mean_<tag>.csv."""
    prefix, suffix = pattern.split("*")
    found = {}
    for path in sorted(glob.glob(os.path.join(run_dir, pattern))):
        name = os.path.basename(path)
        tag = name[len(prefix):len(name) - len(suffix)]
        found[tag] = path
    return found
