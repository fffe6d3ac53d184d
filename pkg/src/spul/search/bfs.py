"""
Plain breadth-first search, ignoring edge labels.
"""

from collections import deque
from typing import Deque, Dict, List, NamedTuple, Optional

from ..graph.model import LabeledDigraph
from .results import check_vertex


class BfsEntry(NamedTuple):
    distance: int
    predecessor_edge: Optional[int]


def bfs(graph: LabeledDigraph, source: int) -> Dict[int, BfsEntry]:
    """
    Unlabeled BFS from `source`.

    Returns:
        Map from every reachable vertex to its distance and the edge it was
        discovered through (None for the source). Unreachable vertices are absent.
    """
    check_vertex(graph, source, "source")
    tree: Dict[int, BfsEntry] = {source: BfsEntry(0, None)}
    queue: Deque[int] = deque([source])
    while queue:
        vertex = queue.popleft()
        distance = tree[vertex].distance + 1
        for eid in graph.out_edges(vertex):
            target = graph.edge(eid).target
            if target in tree:
                continue
            tree[target] = BfsEntry(distance, eid)
            queue.append(target)
    return tree


def bfs_path(
    graph: LabeledDigraph, tree: Dict[int, BfsEntry], vertex: int
) -> List[int]:
    """Edge ids of the BFS-tree path to `vertex`, following predecessor edges."""
    edges: List[int] = []
    current = vertex
    while True:
        predecessor = tree[current].predecessor_edge
        if predecessor is None:
            break
        edges.append(predecessor)
        current = graph.edge(predecessor).source
    edges.reverse()
    return edges
