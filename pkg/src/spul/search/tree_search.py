"""
Algorithm A: breadth-first search over a shortest-feasible-path tree on edges.

Every feasible prefix path is kept in the tree, so memory grows with the
number of label-distinct paths, not with the number of vertices.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, Deque, FrozenSet, Iterable, List, Optional

from ..graph.model import LabeledDigraph, RainbowPath
from .results import SearchBudget, SearchResult
from .tracker import SearchTracker

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SearchTreeNode:
    """
    One feasible path in the tree, represented by its last edge.

    The root is the dummy edge into the start vertex (edge None, depth 0).
    """

    edge: Optional[int]
    parent: Optional["SearchTreeNode"]
    depth: int
    head: int
    used_labels: FrozenSet[int]

    @property
    def is_root(self) -> bool:
        return self.edge is None

    def edge_path(self) -> List[int]:
        edges: List[int] = []
        node: Optional[SearchTreeNode] = self
        while node is not None and node.edge is not None:
            edges.append(node.edge)
            node = node.parent
        edges.reverse()
        return edges


def alg_a(
    graph: LabeledDigraph,
    source: int,
    targets: Optional[Iterable[int]] = None,
    budget: Optional[SearchBudget] = None,
    observer: Optional[Callable[[SearchTreeNode], None]] = None,
) -> SearchResult:
    """
    Shortest paths with unique labels from `source`.

    Nodes are processed FIFO; the out-edges of each node's head vertex are
    tried in insertion order and an edge extends the node iff its label is
    not yet used on the node's path. The first arrival at a vertex is
    reported as its shortest feasible path.

    Args:
        graph: the labeled multigraph
        source: start vertex id
        targets: vertices whose paths are wanted; the search stops early
            once all of them are found. None requests every vertex, so the
            search runs until all are found or the queue is empty.
        budget: node/queue budget; exceeding it returns a partial result
            with `aborted` set
        observer: called with every dequeued node

    Returns:
        SearchResult with one entry per requested target
    """
    tracker = SearchTracker(
        graph, source, targets, budget or SearchBudget.unlimited(), "a"
    )
    if tracker.done or not tracker.allocate():
        return tracker.finish()

    root = SearchTreeNode(
        edge=None, parent=None, depth=0, head=source, used_labels=frozenset()
    )
    tracker.record(source, lambda: RainbowPath.empty(source))

    queue: Deque[SearchTreeNode] = deque([root])
    while queue and not tracker.done:
        node = queue.popleft()
        if observer is not None:
            observer(node)
        for eid in graph.out_edges(node.head):
            edge = graph.edge(eid)
            if edge.label in node.used_labels:
                continue
            if not tracker.admit(len(queue)) or not tracker.allocate():
                return tracker.finish()
            child = SearchTreeNode(
                edge=eid,
                parent=node,
                depth=node.depth + 1,
                head=edge.target,
                used_labels=node.used_labels | {edge.label},
            )
            queue.append(child)
            tracker.record(
                edge.target,
                lambda: RainbowPath.from_edges(graph, source, child.edge_path()),
            )
            if tracker.done:
                break

    return tracker.finish()
