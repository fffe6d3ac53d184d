"""
Result types shared by every search algorithm.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional

from ..graph.model import LabeledDigraph, RainbowPath
from ..utils.exceptions import ConfigurationError, GraphError


class TargetStatus(str, Enum):
    FOUND = "found"
    UNREACHABLE = "unreachable"
    NOT_FOUND_BEFORE_BUDGET = "not-found-before-budget"


@dataclass(frozen=True)
class SearchBudget:
    """
    Explicit memory budget for the exponential searches.

    A search that would allocate more tree nodes, or hold more queue
    entries, than allowed stops and returns a flagged partial result.
    None means unlimited.
    """

    max_tree_nodes: Optional[int] = None
    max_queue_entries: Optional[int] = None

    def __post_init__(self):
        for name in ("max_tree_nodes", "max_queue_entries"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ConfigurationError(f"{name} must be positive, got {value}")

    @classmethod
    def unlimited(cls) -> "SearchBudget":
        return cls()

    @property
    def is_unlimited(self) -> bool:
        return self.max_tree_nodes is None and self.max_queue_entries is None


@dataclass
class TargetResult:
    vertex: int
    status: TargetStatus
    distance: Optional[int] = None
    witness: Optional[RainbowPath] = None
    bfs_distance: Optional[int] = None

    @property
    def found(self) -> bool:
        return self.status is TargetStatus.FOUND


@dataclass
class SearchResult:
    """
    Outcome of one search from `source`.

    `targets` is keyed by vertex id in ascending order. `nodes_allocated`
    counts every search-tree node created, the root included.
    """

    source: int
    algorithm: str
    targets: Dict[int, TargetResult] = field(default_factory=dict)
    aborted: bool = False
    nodes_allocated: int = 0
    early_found: int = 0
    elapsed_seconds: float = 0.0
    preprocessed: bool = False

    @property
    def paths_found(self) -> int:
        """Found targets other than the source (its empty path is not counted)."""
        return sum(
            1
            for vertex, entry in self.targets.items()
            if entry.found and vertex != self.source
        )

    def found_paths(self) -> Dict[int, RainbowPath]:
        return {
            vertex: entry.witness
            for vertex, entry in self.targets.items()
            if entry.found and entry.witness is not None
        }

    def status_of(self, vertex: int) -> TargetStatus:
        return self.targets[vertex].status


def check_vertex(graph: LabeledDigraph, vertex: int, role: str = "vertex") -> None:
    if not 0 <= vertex < graph.vertex_count:
        raise GraphError(
            f"{role} id {vertex} out of range for {graph.vertex_count} vertices"
        )
