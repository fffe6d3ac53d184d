"""
First-arrival bookkeeping for the FIFO tree searches.
"""

import logging
import time
from typing import Callable, Dict, Iterable, Optional, Set

from ..graph.model import LabeledDigraph, RainbowPath
from .results import (
    SearchBudget,
    SearchResult,
    TargetResult,
    TargetStatus,
    check_vertex,
)

logger = logging.getLogger(__name__)


class SearchTracker:
    """
    Records the first feasible arrival at each vertex, enforces the budget
    and decides when the search may stop.

    Because nodes are dequeued in nondecreasing depth, the first arrival at
    a vertex is its shortest feasible path.
    """

    def __init__(
        self,
        graph: LabeledDigraph,
        source: int,
        targets: Optional[Iterable[int]],
        budget: SearchBudget,
        algorithm: str,
    ):
        check_vertex(graph, source, "source")
        self.graph = graph
        self.source = source
        self.budget = budget
        self.algorithm = algorithm

        # None requests every vertex
        if targets is None:
            self.requested: Set[int] = set(range(graph.vertex_count))
        else:
            self.requested = set(targets)
            for vertex in self.requested:
                check_vertex(graph, vertex, "target")
        self.remaining: Set[int] = set(self.requested)

        self.arrivals: Dict[int, RainbowPath] = {}
        self.nodes_allocated = 0
        self.aborted = False
        self._started = time.perf_counter()

    @property
    def done(self) -> bool:
        return not self.remaining

    def allocate(self) -> bool:
        """Account for one new tree node; False (and aborted) if over budget."""
        limit = self.budget.max_tree_nodes
        if limit is not None and self.nodes_allocated >= limit:
            self._abort(f"tree node budget {limit} exhausted")
            return False
        self.nodes_allocated += 1
        return True

    def admit(self, queue_length: int) -> bool:
        """Check that one more queue entry fits; False (and aborted) if not."""
        limit = self.budget.max_queue_entries
        if limit is not None and queue_length >= limit:
            self._abort(f"queue budget {limit} exhausted")
            return False
        return True

    def record(self, vertex: int, witness: Callable[[], RainbowPath]) -> None:
        """Report the path to `vertex` if this is its first arrival."""
        if vertex in self.arrivals:
            return
        path = witness()
        self.arrivals[vertex] = path
        self.remaining.discard(vertex)
        logger.debug(
            f"Reached {self.graph.vertex_name(vertex)} at distance {path.length}"
        )

    def _abort(self, reason: str) -> None:
        self.aborted = True
        logger.warning(
            f"Algorithm {self.algorithm.upper()} from "
            f"{self.graph.vertex_name(self.source)} stopped: {reason}, "
            f"{len(self.remaining)} targets open"
        )

    def finish(self) -> SearchResult:
        unfound = (
            TargetStatus.NOT_FOUND_BEFORE_BUDGET
            if self.aborted
            else TargetStatus.UNREACHABLE
        )
        targets: Dict[int, TargetResult] = {}
        for vertex in sorted(self.requested):
            path = self.arrivals.get(vertex)
            if path is None:
                targets[vertex] = TargetResult(vertex=vertex, status=unfound)
            else:
                targets[vertex] = TargetResult(
                    vertex=vertex,
                    status=TargetStatus.FOUND,
                    distance=path.length,
                    witness=path,
                )
        result = SearchResult(
            source=self.source,
            algorithm=self.algorithm,
            targets=targets,
            aborted=self.aborted,
            nodes_allocated=self.nodes_allocated,
            elapsed_seconds=time.perf_counter() - self._started,
        )
        logger.info(
            f"Algorithm {self.algorithm.upper()} from "
            f"{self.graph.vertex_name(self.source)}: {result.paths_found} paths, "
            f"{result.nodes_allocated} nodes, {result.elapsed_seconds:.3f}s"
            + (" (aborted)" if result.aborted else "")
        )
        return result
