"""
Edge-list files: one `source<TAB>target<TAB>label` edge per line.

Lines starting with `#` and blank lines are ignored; duplicate lines are
kept as parallel edges and reported as warnings.
"""

import logging
from typing import List, Optional, Set, Tuple

from ..graph.model import GraphBuilder, LabeledDigraph
from ..utils.exceptions import EdgeListParseError
from .diagnostics import ParseDiagnostic, Severity
from .result_file import SEQUENCE_SEPARATOR

logger = logging.getLogger(__name__)

FIELD_SEPARATOR = "\t"


def _is_skipped(line: str) -> bool:
    return not line.strip() or line.startswith("#")


def _field_problem(fields: List[str]) -> Optional[str]:
    if len(fields) != 3:
        return f"expected 3 tab-separated fields, got {len(fields)}"
    if not all(fields):
        return "empty field"
    for field in fields:
        # result files join path names with this separator
        if SEQUENCE_SEPARATOR in field:
            return f"name {field!r} contains '{SEQUENCE_SEPARATOR}'"
    return None


def parse_edge_list(text: str) -> Tuple[LabeledDigraph, List[ParseDiagnostic]]:
    """
    Parse an edge-list document.

    Returns:
        The graph and the accumulated warnings

    Raises:
        EdgeListParseError: on the first line without exactly three
            non-empty tab-separated fields, or with a name containing `;`
    """
    builder = GraphBuilder()
    diagnostics: List[ParseDiagnostic] = []
    seen: Set[Tuple[str, ...]] = set()

    for number, line in enumerate(text.splitlines(), start=1):
        if _is_skipped(line):
            continue
        fields = line.split(FIELD_SEPARATOR)
        problem = _field_problem(fields)
        if problem is not None:
            error = ParseDiagnostic(number, problem, Severity.ERROR)
            diagnostics.append(error)
            raise EdgeListParseError(str(error), diagnostics)

        triple = tuple(fields)
        if triple in seen:
            diagnostics.append(
                ParseDiagnostic(
                    number, f"duplicate edge {fields[0]} -> {fields[1]} ({fields[2]})"
                )
            )
        seen.add(triple)
        builder.add_edge(*fields)

    graph = builder.build()
    warnings = sum(1 for d in diagnostics if d.severity is Severity.WARNING)
    if warnings:
        logger.warning(f"Edge list parsed with {warnings} warnings")
    logger.debug(f"Parsed {graph!r}")
    return graph, diagnostics


def write_edge_list(graph: LabeledDigraph) -> str:
    """Serialize in edge order, so parsing the text rebuilds an identical graph."""
    return "".join(
        FIELD_SEPARATOR.join(triple) + "\n" for triple in graph.triples()
    )


def parse_name_list(text: str) -> List[str]:
    """One name per line, `#` comments and blank lines ignored (exclusion lists)."""
    return [line.strip() for line in text.splitlines() if not _is_skipped(line)]

