"""
Exhaustive rainbow-path enumeration, the ground truth for small graphs.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Set

from ..graph.model import LabeledDigraph
from ..search.results import check_vertex
from ..utils.exceptions import ConfigurationError, OracleLimitError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleLimits:
    max_vertices: int = 8
    max_edges: int = 20
    max_labels: int = 6

    def __post_init__(self):
        for name in ("max_vertices", "max_edges", "max_labels"):
            if getattr(self, name) <= 0:
                raise ConfigurationError(f"{name} must be positive")

    def check(self, graph: LabeledDigraph) -> None:
        """Raise OracleLimitError naming the first violated limit."""
        for limit, value, maximum in (
            ("vertices", graph.vertex_count, self.max_vertices),
            ("edges", graph.edge_count, self.max_edges),
            ("labels", graph.label_count, self.max_labels),
        ):
            if value > maximum:
                raise OracleLimitError(limit, value, maximum)


class RainbowCount(NamedTuple):
    distance: int
    count: int


def enumerate_rainbow(
    graph: LabeledDigraph, source: int, limits: OracleLimits = OracleLimits()
) -> Dict[int, RainbowCount]:
    """
    Enumerate every edge sequence from `source` with pairwise-distinct labels.

    Vertices may repeat; depth is bounded by the number of distinct labels.

    Returns:
        For every vertex with at least one rainbow path: the minimum length
        and how many distinct rainbow paths have that length. The source maps
        to (0, 1), its empty path.

    Raises:
        OracleLimitError: if the graph exceeds `limits`
    """
    limits.check(graph)
    check_vertex(graph, source, "source")

    best: Dict[int, List[int]] = {source: [0, 1]}
    used: Set[int] = set()
    visited_sequences = 0

    def extend(vertex: int, depth: int) -> None:
        nonlocal visited_sequences
        for eid in graph.out_edges(vertex):
            edge = graph.edge(eid)
            if edge.label in used:
                continue
            visited_sequences += 1
            length = depth + 1
            entry = best.get(edge.target)
            if entry is None or length < entry[0]:
                best[edge.target] = [length, 1]
            elif length == entry[0]:
                entry[1] += 1
            used.add(edge.label)
            extend(edge.target, length)
            used.discard(edge.label)

    extend(source, 0)
    logger.debug(f"Oracle enumerated {visited_sequences} rainbow sequences")
    return {
        vertex: RainbowCount(distance, count)
        for vertex, (distance, count) in sorted(best.items())
    }
