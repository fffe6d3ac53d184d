"""
Search orchestration: optional preprocessing followed by Algorithm A or B.
"""

import logging
import time
from typing import Callable, Dict, Iterable, Optional

from ..graph.model import LabeledDigraph, RainbowPath
from ..utils.exceptions import ConfigurationError
from .bfs import bfs
from .compressed_search import alg_b
from .preprocess import preprocess
from .results import (
    SearchBudget,
    SearchResult,
    TargetResult,
    TargetStatus,
    check_vertex,
)
from .tree_search import alg_a

logger = logging.getLogger(__name__)

SearchFunction = Callable[..., SearchResult]

ALGORITHMS: Dict[str, SearchFunction] = {
    "a": alg_a,
    "b": alg_b,
}


def get_algorithm(name: str) -> SearchFunction:
    try:
        return ALGORITHMS[name.lower()]
    except KeyError:
        raise ConfigurationError(
            f"unknown algorithm '{name}', expected one of: {', '.join(ALGORITHMS)}"
        ) from None


def solve(
    graph: LabeledDigraph,
    source: int,
    targets: Optional[Iterable[int]] = None,
    algorithm: str = "a",
    use_preprocess: bool = False,
    budget: Optional[SearchBudget] = None,
) -> SearchResult:
    """
    Compute shortest feasible paths from `source`.

    Args:
        graph: the labeled multigraph
        source: start vertex id
        targets: requested vertices; None means every vertex, an explicit
            empty collection returns immediately
        algorithm: "a" (edge tree) or "b" (compressed arcs)
        use_preprocess: run the two BFS stages first; the main search then
            only looks for reachable targets without a feasible BFS path and
            stops as soon as it has them
        budget: node/queue budget for the main search

    Returns:
        SearchResult with BFS distances filled in for every target. Targets
        not reachable at all are `unreachable`, never budget-limited.
    """
    started = time.perf_counter()
    search = get_algorithm(algorithm)
    check_vertex(graph, source, "source")
    budget = budget or SearchBudget.unlimited()

    if targets is None:
        requested = list(range(graph.vertex_count))
    else:
        requested = sorted(set(targets))
        for vertex in requested:
            check_vertex(graph, vertex, "target")
        if not requested:
            return SearchResult(
                source=source,
                algorithm=algorithm.lower(),
                preprocessed=use_preprocess,
            )

    early: Dict[int, RainbowPath] = {}
    main: Optional[SearchResult] = None
    if use_preprocess:
        stages = preprocess(graph, source)
        bfs_tree = stages.bfs_tree
        wanted = set(requested)
        early = {v: p for v, p in stages.early_found.items() if v in wanted}
        open_targets = {
            v for v in requested if v in stages.reachable and v not in early
        }
        if open_targets:
            main = search(graph, source, open_targets, budget)
        else:
            logger.info("Preprocessing answered every target, main search skipped")
    else:
        bfs_tree = bfs(graph, source)
        main = search(graph, source, None if targets is None else requested, budget)

    aborted = main.aborted if main is not None else False
    merged: Dict[int, TargetResult] = {}
    for vertex in requested:
        entry = bfs_tree.get(vertex)
        bfs_distance = entry.distance if entry is not None else None
        path = early.get(vertex)
        if path is None and main is not None and vertex in main.targets:
            path = main.targets[vertex].witness
        if path is not None:
            status = TargetStatus.FOUND
        elif entry is None or not aborted:
            status = TargetStatus.UNREACHABLE
        else:
            status = TargetStatus.NOT_FOUND_BEFORE_BUDGET
        merged[vertex] = TargetResult(
            vertex=vertex,
            status=status,
            distance=path.length if path is not None else None,
            witness=path,
            bfs_distance=bfs_distance,
        )

    result = SearchResult(
        source=source,
        algorithm=algorithm.lower(),
        targets=merged,
        aborted=aborted,
        nodes_allocated=main.nodes_allocated if main is not None else 0,
        early_found=len(early),
        elapsed_seconds=time.perf_counter() - started,
        preprocessed=use_preprocess,
    )
    logger.info(
        f"Solved from {graph.vertex_name(source)} with algorithm {algorithm.upper()}"
        f"{' + preprocessing' if use_preprocess else ''}: "
        f"{result.paths_found} paths ({result.early_found} from preprocessing), "
        f"{result.nodes_allocated} nodes, {result.elapsed_seconds:.3f}s"
    )
    return result
