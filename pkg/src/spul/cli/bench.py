"""
Benchmark statistics: how many BFS shortest paths are feasible, and how
many targets a label-constrained search can still reach.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from ..graph.model import LabeledDigraph
from ..search.results import SearchBudget, SearchResult
from ..search.solver import solve
from ..utils.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

TOTAL_ROW_NAME = "TOTAL"


@dataclass(frozen=True)
class BenchRow:
    """Counts for one source; the source itself is never counted as a target."""

    source: str
    source_id: int
    sp_total: int
    sp_correct: int
    spul_found: int
    nodes_allocated: int = 0
    aborted: bool = False
    elapsed_seconds: float = 0.0

    @property
    def sp_infeasible(self) -> int:
        return self.sp_total - self.sp_correct

    @classmethod
    def from_result(cls, graph: LabeledDigraph, result: SearchResult) -> "BenchRow":
        source = result.source
        reachable = sum(
            1
            for vertex, entry in result.targets.items()
            if entry.bfs_distance is not None and vertex != source
        )
        # early_found includes the source's empty path
        correct = result.early_found - (1 if source in result.targets else 0)
        return cls(
            source=graph.vertex_name(source),
            source_id=source,
            sp_total=reachable,
            sp_correct=correct,
            spul_found=result.paths_found,
            nodes_allocated=result.nodes_allocated,
            aborted=result.aborted,
            elapsed_seconds=result.elapsed_seconds,
        )


@dataclass
class BenchReport:
    algorithm: str
    rows: List[BenchRow] = field(default_factory=list)

    @property
    def aborted(self) -> bool:
        return any(row.aborted for row in self.rows)

    def totals(self) -> BenchRow:
        return BenchRow(
            source=TOTAL_ROW_NAME,
            source_id=-1,
            sp_total=sum(row.sp_total for row in self.rows),
            sp_correct=sum(row.sp_correct for row in self.rows),
            spul_found=sum(row.spul_found for row in self.rows),
            nodes_allocated=sum(row.nodes_allocated for row in self.rows),
            aborted=self.aborted,
            elapsed_seconds=sum(row.elapsed_seconds for row in self.rows),
        )


def compute_bench(
    graph: LabeledDigraph,
    sources: Sequence[int],
    algorithm: str = "a",
    budget: Optional[SearchBudget] = None,
    workers: int = 1,
) -> BenchReport:
    """
    Run preprocessing plus the chosen algorithm from every source.

    Args:
        graph: the labeled multigraph, shared read-only by all workers
        sources: source vertex ids; duplicates are benchmarked once
        algorithm: "a" or "b"
        budget: per-source budget for the main search
        workers: thread count; 1 runs the sources sequentially

    Returns:
        BenchReport with rows ordered by source vertex id
    """
    if workers < 1:
        raise ConfigurationError(f"workers must be positive, got {workers}")
    unique = sorted(set(sources))

    def run(source: int) -> BenchRow:
        result = solve(
            graph,
            source,
            algorithm=algorithm,
            use_preprocess=True,
            budget=budget,
        )
        return BenchRow.from_result(graph, result)

    if workers == 1 or len(unique) <= 1:
        rows = [run(source) for source in unique]
    else:
        logger.info(f"Benchmarking {len(unique)} sources on {workers} workers")
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run, unique))

    report = BenchReport(
        algorithm=algorithm.lower(),
        rows=sorted(rows, key=lambda row: row.source_id),
    )
    totals = report.totals()
    logger.info(
        f"Bench over {len(report.rows)} sources: {totals.sp_total} SP, "
        f"{totals.sp_correct} correct, {totals.sp_infeasible} infeasible, "
        f"{totals.spul_found} SPUL"
    )
    return report
