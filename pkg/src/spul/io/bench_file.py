"""
Bench report files: one row per source plus a totals row.
"""

import json
from typing import Any, Dict, List

from ..cli.bench import BenchReport, BenchRow
from ..utils.exceptions import ConfigurationError

BENCH_COLUMNS = (
    "source",
    "sp_total",
    "sp_correct",
    "sp_infeasible",
    "spul_found",
    "nodes_allocated",
    "aborted",
)


def _values(row: BenchRow) -> List[Any]:
    return [
        row.source,
        row.sp_total,
        row.sp_correct,
        row.sp_infeasible,
        row.spul_found,
        row.nodes_allocated,
        row.aborted,
    ]


def _tsv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _json_row(row: BenchRow) -> Dict[str, Any]:
    document = dict(zip(BENCH_COLUMNS, _values(row)))
    document["elapsed_seconds"] = round(row.elapsed_seconds, 6)
    return document


def write_bench(report: BenchReport, fmt: str = "tsv") -> str:
    """
    Render a bench report. The totals row comes last; timing appears in
    JSON only.
    """
    if fmt == "tsv":
        rows = report.rows + [report.totals()]
        lines = ["\t".join(BENCH_COLUMNS)]
        lines.extend(
            "\t".join(_tsv_cell(value) for value in _values(row)) for row in rows
        )
        return "\n".join(lines) + "\n"
    if fmt == "json":
        document = {
            "algorithm": report.algorithm,
            "sources": [_json_row(row) for row in report.rows],
            "totals": _json_row(report.totals()),
        }
        return json.dumps(document, indent=2) + "\n"
    raise ConfigurationError(f"unknown output format '{fmt}', expected tsv or json")
