"""Report serialization: JSON for programmatic use, CSV for plotting.

Infinite diameters serialize as the literal string INF; undefined values
(e.g. the density of a singleton community) as empty CSV fields / JSON
null. Output is deterministic: fixed column order, sorted JSON keys,
repr-formatted floats.
"""

from __future__ import annotations

import io
import json

from .harness import ComboResult, QueryRecord, RunReport, SCORE_FIELDS
from .structural import INF

CSV_COLUMNS = (
    "query", "combo", "params", "found", "reason", "n_members", "n_events",
) + SCORE_FIELDS

SCHEMA_COMMENT = "# cohesion-report v1 columns: " + ",".join(CSV_COLUMNS)


def _jsonable(value) -> object:
    if value == INF:
        return "INF"
    return value


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if value == INF:
        return "INF"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _params_label(params: dict) -> str:
    return ";".join(f"{k}={params[k]}" for k in sorted(params))


def _combo_dict(combo: ComboResult) -> dict:
    return {
        "params": combo.params,
        "found": combo.found,
        "reason": combo.reason,
        "n_members": combo.n_members,
        "n_events": combo.n_events,
        "scores": {name: _jsonable(combo.score(name)) for name in SCORE_FIELDS},
    }


def _record_dict(record: QueryRecord) -> dict:
    return {
        "query": record.query,
        "hit": record.hit,
        "averaged": {k: _jsonable(v) for k, v in record.averaged.items()},
        "combos": [_combo_dict(c) for c in record.combos],
    }


def report_to_dict(report: RunReport) -> dict:
    return {
        "plan": report.plan,
        "metadata": report.metadata,
        "q_hit": report.q_hit,
        "aggregates": {k: _jsonable(v) for k, v in report.aggregates.items()},
        "records": [_record_dict(r) for r in report.records],
    }


def report_to_json(report: RunReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2) + "\n"


def dict_to_csv(data: dict) -> str:
    """CSV with one row per query x parameter combination, then an
    aggregate block. Operates on the JSON-shaped dict so stored reports
    can be re-emitted."""
    out = io.StringIO()
    out.write(SCHEMA_COMMENT + "\n")
    out.write(",".join(CSV_COLUMNS) + "\n")
    for record in data["records"]:
        for combo_idx, combo in enumerate(record["combos"]):
            row = [
                str(record["query"]),
                str(combo_idx),
                _params_label(combo["params"]),
                "true" if combo["found"] else "false",
                combo["reason"] or "",
                _csv_cell(combo["n_members"]),
                _csv_cell(combo["n_events"]),
            ]
            scores = combo["scores"]
            row.extend(_csv_cell(scores[name]) for name in SCORE_FIELDS)
            out.write(",".join(row) + "\n")
    agg = data["aggregates"]
    row = ["AGGREGATE", "", "mean", "", "", "", ""]
    row.extend(_csv_cell(agg[name]) for name in SCORE_FIELDS)
    out.write(",".join(row) + "\n")
    out.write(f"# q_hit = {_csv_cell(float(data['q_hit']))}\n")
    return out.getvalue()


def report_to_csv(report: RunReport) -> str:
    return dict_to_csv(report_to_dict(report))


def emit_report(report: RunReport | dict, fmt: str, path: str) -> None:
    """Write a report (object or stored dict) as csv or json."""
    data = report if isinstance(report, dict) else report_to_dict(report)
    if fmt == "json":
        text = json.dumps(data, sort_keys=True, indent=2) + "\n"
    elif fmt == "csv":
        text = dict_to_csv(data)
    else:
        raise ValueError(f"unknown report format: {fmt!r}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
