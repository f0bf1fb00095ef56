"""
CSV output for benchmark rows. Every file starts with a schema line
("# schema: <version>") followed by a fixed header, so an empty run still
produces a well-formed file.
"""

import io
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, TextIO, Tuple, Union

import numpy as np
import pandas as pd

from ..core.constants import (
    GADGET_CSV_COLUMNS,
    GADGET_SCHEMA_VERSION,
    WORKLOAD_CSV_COLUMNS,
    WORKLOAD_SCHEMA_VERSION,
)
from ..core.exceptions import WorkloadSpecError

SCHEMA_PREFIX = "# schema: "


def to_frame(rows: Sequence[Dict[str, Any]], columns: Sequence[str]) -> pd.DataFrame:
    return pd.DataFrame(list(rows), columns=list(columns))


def write_csv(
    rows: Sequence[Dict[str, Any]],
    columns: Sequence[str],
    schema_version: str,
    out: Union[str, Path, TextIO],
) -> None:
    """Write the schema line, the header and one line per row"""
    frame = to_frame(rows, columns)
    if isinstance(out, (str, Path)):
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(f"{SCHEMA_PREFIX}{schema_version}\n")
            frame.to_csv(handle, index=False)
    else:
        out.write(f"{SCHEMA_PREFIX}{schema_version}\n")
        frame.to_csv(out, index=False)


def write_workload_csv(rows: Sequence[Dict[str, Any]], out: Union[str, Path, TextIO]) -> None:
    write_csv(rows, WORKLOAD_CSV_COLUMNS, WORKLOAD_SCHEMA_VERSION, out)


def write_gadget_csv(rows: Sequence[Dict[str, Any]], out: Union[str, Path, TextIO]) -> None:
    write_csv(rows, GADGET_CSV_COLUMNS, GADGET_SCHEMA_VERSION, out)


def render_csv(rows: Sequence[Dict[str, Any]], columns: Sequence[str], schema_version: str) -> str:
    buffer = io.StringIO()
    write_csv(rows, columns, schema_version, buffer)
    return buffer.getvalue()


def read_csv(source: Union[str, Path, TextIO]) -> Tuple[str, pd.DataFrame]:
    """(schema version, rows) of a file written by write_csv"""
    handle = open(source, "r", encoding="utf-8") if isinstance(source, (str, Path)) else source
    try:
        first = handle.readline().rstrip("\n")
        if not first.startswith(SCHEMA_PREFIX):
            raise WorkloadSpecError(
                f"Missing schema line, got {first!r}", {"schema": "first line must name the schema"}
            )
        return first[len(SCHEMA_PREFIX):], pd.read_csv(handle)
    finally:
        if isinstance(source, (str, Path)):
            handle.close()


def summarize(frame: pd.DataFrame, by: Optional[List[str]] = None) -> pd.DataFrame:
    """Median of the numeric columns per group (problem, m, op_kind by default)"""
    by = by or ["problem", "m", "op_kind"]
    numeric = frame.select_dtypes("number").columns.difference(by)
    return frame.groupby(by, as_index=False)[list(numeric)].median()


def fit_exponent(ms: Sequence[int], work: Sequence[float]) -> float:
    """Slope of log(work) against log(m)"""
    slope, _ = np.polyfit(np.log2(ms), np.log2(np.maximum(work, 1e-9)), 1)
    return float(slope)
