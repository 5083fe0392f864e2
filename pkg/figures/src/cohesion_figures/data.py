"""Reader for the cohesion report CSV schema.

Expected layout (one file per evaluation run):

    # cohesion-report v1 columns: query,combo,params,found,...
    query,combo,params,found,reason,n_members,n_events,d,size,...
    <one row per query x parameter combination>
    AGGREGATE,,mean,,,,,<mean scores>
    # q_hit = <percentage>

Empty cells decode to None, the literal INF to math.inf.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

# Per-query distributions (boxplots) versus group-level scalars (bars).
BOX_MEASURES = ("ei", "sit", "ced", "d", "size", "deg_min")
BAR_MEASURES = ("gip", "gid", "q_hit")
MEASURES = BOX_MEASURES + BAR_MEASURES

Q_HIT_PREFIX = "# q_hit ="


@dataclass(frozen=True)
class ReportData:
    label: str
    columns: tuple[str, ...]
    rows: tuple[dict, ...]  # per query x combo, AGGREGATE excluded
    aggregates: dict
    q_hit: float | None

    def values(self, column: str) -> list[float]:
        """Finite values of one score column over successful rows."""
        if column not in self.columns:
            raise ValueError(f"unknown column {column!r} in report {self.label!r}")
        out = []
        for row in self.rows:
            if not row["found"]:
                continue
            v = row[column]
            if v is not None and not math.isinf(v):
                out.append(v)
        return out


def _decode(column: str, cell: str):
    if cell == "":
        return None
    if column == "found":
        return cell == "true"
    if column in ("params", "reason"):
        return cell
    if cell == "INF":
        return math.inf
    if column in ("query", "combo", "n_members", "n_events"):
        return int(cell)
    return float(cell)


def load_report(path: str, label: str | None = None) -> ReportData:
    name = label if label is not None else Path(path).stem
    columns: tuple[str, ...] | None = None
    rows: list[dict] = []
    aggregates: dict = {}
    q_hit: float | None = None
    with open(path, encoding="utf-8", newline="") as fh:
        for record in csv.reader(fh):
            if not record:
                continue
            if record[0].startswith("#"):
                comment = ",".join(record)
                if comment.startswith(Q_HIT_PREFIX):
                    q_hit = float(comment[len(Q_HIT_PREFIX):])
                continue
            if columns is None:
                columns = tuple(record)
                continue
            if len(record) != len(columns):
                raise ValueError(
                    f"{path}: row has {len(record)} cells, header has {len(columns)}"
                )
            if record[0] == "AGGREGATE":
                aggregates = {
                    c: _decode(c, v)
                    for c, v in zip(columns, record)
                    if c not in ("query", "combo", "params", "found", "reason")
                }
                continue
            rows.append({c: _decode(c, v) for c, v in zip(columns, record)})
    if columns is None:
        raise ValueError(f"{path}: no header row")
    if not rows:
        raise ValueError(f"{path}: no data rows")
    return ReportData(name, columns, tuple(rows), aggregates, q_hit)
