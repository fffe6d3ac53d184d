"""
Search result files (tsv | json) and the reader used by `decode`.
"""

import json
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from ..graph.model import LabeledDigraph
from ..search.results import SearchResult, TargetResult, TargetStatus
from ..utils.exceptions import ConfigurationError, ResultFileParseError
from .diagnostics import ParseDiagnostic, Severity

RESULT_COLUMNS = (
    "target",
    "status",
    "spul_distance",
    "bfs_distance",
    "label_sequence",
    "vertex_sequence",
)
RESULT_FORMATS = ("tsv", "json")
ABSENT = "-"
SEQUENCE_SEPARATOR = ";"


@dataclass(frozen=True)
class ResultRow:
    """One target row, by name. Sequences are None when no witness exists."""

    target: str
    status: TargetStatus
    spul_distance: Optional[int]
    bfs_distance: Optional[int]
    label_sequence: Optional[List[str]]
    vertex_sequence: Optional[List[str]]


def _row(graph: LabeledDigraph, entry: TargetResult) -> ResultRow:
    witness = entry.witness
    return ResultRow(
        target=graph.vertex_name(entry.vertex),
        status=entry.status,
        spul_distance=entry.distance,
        bfs_distance=entry.bfs_distance,
        label_sequence=witness.label_names(graph) if witness is not None else None,
        vertex_sequence=witness.vertex_names(graph) if witness is not None else None,
    )


def result_rows(result: SearchResult, graph: LabeledDigraph) -> List[ResultRow]:
    return [_row(graph, result.targets[v]) for v in sorted(result.targets)]


def _cell(value: Any) -> str:
    if value is None:
        return ABSENT
    if isinstance(value, list):
        return SEQUENCE_SEPARATOR.join(value)
    return str(value)


def _to_tsv(rows: List[ResultRow]) -> str:
    lines = ["\t".join(RESULT_COLUMNS)]
    for row in rows:
        lines.append(
            "\t".join(
                [
                    row.target,
                    row.status.value,
                    _cell(row.spul_distance),
                    _cell(row.bfs_distance),
                    _cell(row.label_sequence),
                    _cell(row.vertex_sequence),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _to_json(result: SearchResult, graph: LabeledDigraph, rows: List[ResultRow]) -> str:
    document = {
        "source": graph.vertex_name(result.source),
        "algorithm": result.algorithm,
        "preprocess": result.preprocessed,
        "aborted": result.aborted,
        "nodes_allocated": result.nodes_allocated,
        "paths_found": result.paths_found,
        "early_found": result.early_found,
        "elapsed_seconds": round(result.elapsed_seconds, 6),
        "targets": [
            {
                "target": row.target,
                "status": row.status.value,
                "spul_distance": row.spul_distance,
                "bfs_distance": row.bfs_distance,
                "label_sequence": row.label_sequence,
                "vertex_sequence": row.vertex_sequence,
            }
            for row in rows
        ],
    }
    return json.dumps(document, indent=2) + "\n"


def write_result(result: SearchResult, graph: LabeledDigraph, fmt: str = "tsv") -> str:
    """
    Render a search result, one row per target in vertex-id order.

    TSV omits the run counters and timing so its output is reproducible;
    JSON carries them alongside the rows.

    Raises:
        ConfigurationError: for an unknown format
    """
    rows = result_rows(result, graph)
    if fmt == "tsv":
        return _to_tsv(rows)
    if fmt == "json":
        return _to_json(result, graph, rows)
    raise ConfigurationError(
        f"unknown output format '{fmt}', expected one of: {', '.join(RESULT_FORMATS)}"
    )


def _fail(line: int, message: str) -> ResultFileParseError:
    diagnostic = ParseDiagnostic(line, message, Severity.ERROR)
    return ResultFileParseError(str(diagnostic), [diagnostic])


def _parse_int(value: str, line: int, column: str) -> Optional[int]:
    if value == ABSENT:
        return None
    try:
        return int(value)
    except ValueError:
        raise _fail(line, f"{column} '{value}' is not an integer") from None


def _parse_sequence(value: str) -> Optional[List[str]]:
    if value == ABSENT:
        return None
    return value.split(SEQUENCE_SEPARATOR) if value else []


def _parse_status(value: str, line: int) -> TargetStatus:
    try:
        return TargetStatus(value)
    except ValueError:
        raise _fail(line, f"unknown status '{value}'") from None


def _read_tsv(text: str) -> List[ResultRow]:
    rows: List[ResultRow] = []
    lines = text.splitlines()
    if not lines or tuple(lines[0].split("\t")) != RESULT_COLUMNS:
        raise _fail(1, "missing result header")
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != len(RESULT_COLUMNS):
            raise _fail(
                number, f"expected {len(RESULT_COLUMNS)} fields, got {len(fields)}"
            )
        rows.append(
            ResultRow(
                target=fields[0],
                status=_parse_status(fields[1], number),
                spul_distance=_parse_int(fields[2], number, "spul_distance"),
                bfs_distance=_parse_int(fields[3], number, "bfs_distance"),
                label_sequence=_parse_sequence(fields[4]),
                vertex_sequence=_parse_sequence(fields[5]),
            )
        )
    return rows


def _read_json(text: str) -> List[ResultRow]:
    try:
        document: Dict[str, Any] = json.loads(text)
    except json.JSONDecodeError as e:
        raise _fail(e.lineno, f"invalid JSON: {e.msg}") from None
    try:
        return [
            ResultRow(
                target=item["target"],
                status=_parse_status(item["status"], 1),
                spul_distance=item["spul_distance"],
                bfs_distance=item["bfs_distance"],
                label_sequence=item["label_sequence"],
                vertex_sequence=item["vertex_sequence"],
            )
            for item in document["targets"]
        ]
    except (KeyError, TypeError) as e:
        raise _fail(1, f"result document lacks field {e}") from None


def read_result(text: str) -> List[ResultRow]:
    """
    Read a result file written by `write_result`, detecting the format.

    Raises:
        ResultFileParseError: on a malformed header, row or document
    """
    if text.lstrip().startswith("{"):
        return _read_json(text)
    return _read_tsv(text)
