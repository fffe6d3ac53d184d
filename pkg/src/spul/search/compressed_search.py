"""
Algorithm B: the FIFO tree search over compressed arcs.

Parallel edges between a vertex pair are merged into one arc carrying a
label set, so the tree stores one path per arc sequence instead of one per
edge sequence. Feasibility of an arc sequence is the existence of a system
of distinct representatives, checked by backtracking on every extension.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import (
    Callable,
    Deque,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Set,
    Tuple,
)

from ..graph.model import LabeledDigraph, RainbowPath
from ..graph.transform import CompressedArc, compress_parallel
from .results import SearchBudget, SearchResult
from .tracker import SearchTracker

logger = logging.getLogger(__name__)


def sdr_backtrack(sets: Sequence[Iterable[int]]) -> Optional[Tuple[int, ...]]:
    """
    Pick one label per set, all distinct, by depth-first backtracking.

    Positions are filled in list order and each set's labels are tried in
    ascending order, skipping labels already taken.

    Returns:
        The first complete assignment in that order, or None if none exists
    """
    options: List[List[int]] = [sorted(labels) for labels in sets]
    cursor = [0] * len(options)
    chosen: List[int] = []
    used: Set[int] = set()

    position = 0
    while position < len(options):
        candidates = options[position]
        index = cursor[position]
        while index < len(candidates) and candidates[index] in used:
            index += 1
        if index < len(candidates):
            cursor[position] = index + 1
            chosen.append(candidates[index])
            used.add(candidates[index])
            position += 1
            continue
        # exhausted: reset and backtrack
        cursor[position] = 0
        position -= 1
        if position < 0:
            return None
        used.discard(chosen.pop())
    return tuple(chosen)


@dataclass(frozen=True, eq=False)
class CompressedNode:
    """Tree node over arcs; the root has arc None and sits at the start vertex."""

    arc: Optional[CompressedArc]
    parent: Optional["CompressedNode"]
    depth: int
    head: int

    def arcs(self) -> List[CompressedArc]:
        arcs: List[CompressedArc] = []
        node: Optional[CompressedNode] = self
        while node is not None and node.arc is not None:
            arcs.append(node.arc)
            node = node.parent
        arcs.reverse()
        return arcs


def _arcs_by_source(
    graph: LabeledDigraph, arcs: List[CompressedArc]
) -> List[List[CompressedArc]]:
    adjacency: List[List[CompressedArc]] = [[] for _ in range(graph.vertex_count)]
    for arc in arcs:
        adjacency[arc.source].append(arc)
    return adjacency


def _materialize(
    graph: LabeledDigraph,
    source: int,
    arcs: Sequence[CompressedArc],
    assignment: Sequence[int],
) -> RainbowPath:
    edges = [arc.edge_for_label(graph, label) for arc, label in zip(arcs, assignment)]
    return RainbowPath.from_edges(graph, source, edges)


def alg_b(
    graph: LabeledDigraph,
    source: int,
    targets: Optional[Iterable[int]] = None,
    budget: Optional[SearchBudget] = None,
    observer: Optional[Callable[[CompressedNode], None]] = None,
) -> SearchResult:
    """
    Shortest paths with unique labels over compressed parallel edges.

    Same FIFO discipline, target and budget semantics as alg_a. An arc
    extends a node iff the label sets along the extended arc sequence admit
    a system of distinct representatives. The reported witness takes the
    representatives found by sdr_backtrack and, per arc, the lowest edge id
    carrying the chosen label.
    """
    tracker = SearchTracker(
        graph, source, targets, budget or SearchBudget.unlimited(), "b"
    )
    if tracker.done or not tracker.allocate():
        return tracker.finish()

    adjacency = _arcs_by_source(graph, compress_parallel(graph))
    root = CompressedNode(arc=None, parent=None, depth=0, head=source)
    tracker.record(source, lambda: RainbowPath.empty(source))

    queue: Deque[CompressedNode] = deque([root])
    while queue and not tracker.done:
        node = queue.popleft()
        if observer is not None:
            observer(node)
        prefix = node.arcs()
        prefix_sets: List[FrozenSet[int]] = [arc.label_set for arc in prefix]
        for arc in adjacency[node.head]:
            # whole-sequence check; prefix representatives are never reused
            assignment = sdr_backtrack(prefix_sets + [arc.label_set])
            if assignment is None:
                continue
            if not tracker.admit(len(queue)) or not tracker.allocate():
                return tracker.finish()
            child = CompressedNode(
                arc=arc, parent=node, depth=node.depth + 1, head=arc.target
            )
            queue.append(child)
            tracker.record(
                arc.target,
                lambda: _materialize(graph, source, prefix + [arc], assignment),
            )
            if tracker.done:
                break

    return tracker.finish()

