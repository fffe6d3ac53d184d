"""
Two-stage BFS preprocessing.

Stage 1 finds every vertex reachable from the start at all, so the main
search can stop once feasible paths to all of them are known. Stage 2 runs
BFS again and keeps each BFS-tree path that happens to use pairwise-distinct
labels; such a path is already optimal because the BFS distance is a lower
bound on the feasible distance.
"""

import logging
from collections import deque
from typing import Deque, Dict, FrozenSet, NamedTuple, Tuple

from ..graph.model import LabeledDigraph, RainbowPath
from .bfs import BfsEntry, bfs
from .results import check_vertex

logger = logging.getLogger(__name__)


class PreprocessResult(NamedTuple):
    reachable: FrozenSet[int]
    early_found: Dict[int, RainbowPath]
    bfs_tree: Dict[int, BfsEntry]


def _rainbow_bfs_paths(graph: LabeledDigraph, source: int) -> Dict[int, RainbowPath]:
    # Same discovery order as bfs(), carrying the label set of each tree path.
    paths: Dict[int, Tuple[int, ...]] = {source: ()}
    labels: Dict[int, FrozenSet[int]] = {source: frozenset()}
    visited = {source}
    queue: Deque[int] = deque([source])
    while queue:
        vertex = queue.popleft()
        for eid in graph.out_edges(vertex):
            target = graph.edge(eid).target
            if target in visited:
                continue
            visited.add(target)
            queue.append(target)
            label = graph.edge(eid).label
            if vertex in paths and label not in labels[vertex]:
                paths[target] = paths[vertex] + (eid,)
                labels[target] = labels[vertex] | {label}

    return {
        vertex: RainbowPath(source=source, edges=edges, used_labels=labels[vertex])
        for vertex, edges in paths.items()
    }


def preprocess(graph: LabeledDigraph, source: int) -> PreprocessResult:
    """
    Run both preprocessing stages from `source`.

    Returns:
        PreprocessResult with the reachable set, the vertices whose BFS-tree
        path is already feasible (the source included, with the empty path),
        and the stage-1 BFS tree
    """
    check_vertex(graph, source, "source")
    tree = bfs(graph, source)
    reachable = frozenset(tree)
    early_found = _rainbow_bfs_paths(graph, source)
    logger.info(
        f"Preprocessing from {graph.vertex_name(source)}: {len(reachable)} reachable, "
        f"{len(early_found)} with feasible BFS paths"
    )
    return PreprocessResult(reachable=reachable, early_found=early_found, bfs_tree=tree)
