"""
Labeled Directed Multigraph for the SPUL toolkit.
Vertices and edge labels are interned to dense integer ids in first-appearance order.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from thefuzz import process

from ..utils.exceptions import InvalidPathError, UnknownVertexError

logger = logging.getLogger(__name__)

# Minimum thefuzz score for a name to be offered as a suggestion
SUGGESTION_SCORE_CUTOFF = 70
MAX_SUGGESTIONS = 3


class NameTable:
    """
    Bijection between external string names and dense integer ids.

    Ids are assigned in first-appearance order, so interning the same
    sequence of names always yields the same ids.
    """

    def __init__(self, names: Iterable[str] = ()):
        self._names: List[str] = []
        self._ids: Dict[str, int] = {}
        for name in names:
            self.intern(name)

    def intern(self, name: str) -> int:
        """Return the id of `name`, assigning the next free id if it is new."""
        existing = self._ids.get(name)
        if existing is not None:
            return existing
        new_id = len(self._names)
        self._names.append(name)
        self._ids[name] = new_id
        return new_id

    def id_of(self, name: str) -> Optional[int]:
        return self._ids.get(name)

    def name_of(self, ident: int) -> str:
        return self._names[ident]

    def names(self) -> Tuple[str, ...]:
        return tuple(self._names)

    def suggest(self, name: str) -> List[str]:
        """Close matches for a mistyped name, best first."""
        if not self._names:
            return []
        matches = process.extract(name, self._names, limit=MAX_SUGGESTIONS)
        return [match for match, score in matches if score >= SUGGESTION_SCORE_CUTOFF]

    def __len__(self) -> int:
        return len(self._names)

    def __contains__(self, name: object) -> bool:
        return name in self._ids

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NameTable):
            return NotImplemented
        return self._names == other._names

    def __repr__(self) -> str:
        return f"NameTable({len(self._names)} names)"


@dataclass(frozen=True)
class Edge:
    """A directed, labeled edge. Parallel edges and self-loops are allowed."""

    id: int
    source: int
    target: int
    label: int


class LabeledDigraph:
    """
    Immutable directed multigraph with labeled edges.

    Use GraphBuilder (or build_graph) to construct one. The out-adjacency of
    every vertex lists edge ids in insertion order; that order is the tie-break
    order of every search in the package.
    """

    __slots__ = ("_vertices", "_labels", "_edges", "_out")

    def __init__(
        self,
        vertices: NameTable,
        labels: NameTable,
        edges: Sequence[Edge],
    ):
        self._vertices = vertices
        self._labels = labels
        self._edges: Tuple[Edge, ...] = tuple(edges)

        out: List[List[int]] = [[] for _ in range(len(vertices))]
        for edge in self._edges:
            out[edge.source].append(edge.id)
        self._out: Tuple[Tuple[int, ...], ...] = tuple(tuple(ids) for ids in out)

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def label_count(self) -> int:
        return len(self._labels)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def vertex_names(self) -> Tuple[str, ...]:
        return self._vertices.names()

    @property
    def label_names(self) -> Tuple[str, ...]:
        return self._labels.names()

    def edge(self, edge_id: int) -> Edge:
        return self._edges[edge_id]

    def out_edges(self, vertex: int) -> Tuple[int, ...]:
        """Edge ids leaving `vertex`, in insertion order."""
        return self._out[vertex]

    def has_vertex(self, name: str) -> bool:
        return name in self._vertices

    def vertex_id(self, name: str) -> int:
        """
        Resolve a vertex name.

        Raises:
            UnknownVertexError: with close-match suggestions when the name is absent
        """
        vertex = self._vertices.id_of(name)
        if vertex is None:
            raise UnknownVertexError(name, self._vertices.suggest(name))
        return vertex

    def vertex_name(self, vertex: int) -> str:
        return self._vertices.name_of(vertex)

    def label_id(self, name: str) -> Optional[int]:
        return self._labels.id_of(name)

    def label_name(self, label: int) -> str:
        return self._labels.name_of(label)

    def triples(self) -> List[Tuple[str, str, str]]:
        """The (source, target, label) name triples in edge order."""
        return [
            (
                self.vertex_name(edge.source),
                self.vertex_name(edge.target),
                self.label_name(edge.label),
            )
            for edge in self._edges
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledDigraph):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._labels == other._labels
            and self._edges == other._edges
        )

    def __repr__(self) -> str:
        return (
            f"LabeledDigraph(vertices={self.vertex_count}, "
            f"edges={self.edge_count}, labels={self.label_count})"
        )


class GraphBuilder:
    """Accumulates vertices and edges, then freezes them into a LabeledDigraph."""

    def __init__(self):
        self._vertices = NameTable()
        self._labels = NameTable()
        self._edges: List[Edge] = []

    def add_vertex(self, name: str) -> int:
        return self._vertices.intern(name)

    def add_edge(self, source: str, target: str, label: str) -> int:
        """Append an edge and return its id. Duplicates become parallel edges."""
        edge = Edge(
            id=len(self._edges),
            source=self._vertices.intern(source),
            target=self._vertices.intern(target),
            label=self._labels.intern(label),
        )
        self._edges.append(edge)
        return edge.id

    def build(self) -> LabeledDigraph:
        # Copies, so later add_* calls cannot reach into the frozen graph
        return LabeledDigraph(
            NameTable(self._vertices.names()),
            NameTable(self._labels.names()),
            self._edges,
        )


def build_graph(edge_triples: Iterable[Tuple[str, str, str]]) -> LabeledDigraph:
    """
    Build a graph from (source-name, target-name, label-name) triples.

    Args:
        edge_triples: triples in edge-insertion order; may be empty

    Returns:
        LabeledDigraph with ids interned in first-appearance order
    """
    builder = GraphBuilder()
    for source, target, label in edge_triples:
        builder.add_edge(source, target, label)
    graph = builder.build()
    logger.debug(f"Built {graph!r}")
    return graph


def is_rainbow(graph: LabeledDigraph, edge_ids: Sequence[int]) -> bool:
    """True iff the edges carry pairwise-distinct labels."""
    labels = [graph.edge(eid).label for eid in edge_ids]
    return len(set(labels)) == len(labels)


@dataclass(frozen=True)
class RainbowPath:
    """
    A path from `source` whose edges carry pairwise-distinct labels.

    Vertices may repeat along the path; only labels are constrained.
    """

    source: int
    edges: Tuple[int, ...]
    used_labels: FrozenSet[int]

    @property
    def length(self) -> int:
        return len(self.edges)

    @classmethod
    def empty(cls, source: int) -> "RainbowPath":
        return cls(source=source, edges=(), used_labels=frozenset())

    @classmethod
    def from_edges(
        cls, graph: LabeledDigraph, source: int, edge_ids: Sequence[int]
    ) -> "RainbowPath":
        """
        Validate and wrap an edge sequence.

        Raises:
            InvalidPathError: if consecutive edges do not connect, the first
                edge does not leave `source`, or a label repeats
        """
        current = source
        for eid in edge_ids:
            if not 0 <= eid < graph.edge_count:
                raise InvalidPathError(f"edge id {eid} does not exist")
            edge = graph.edge(eid)
            if edge.source != current:
                raise InvalidPathError(
                    f"edge {eid} starts at '{graph.vertex_name(edge.source)}', "
                    f"expected '{graph.vertex_name(current)}'"
                )
            current = edge.target
        if not is_rainbow(graph, edge_ids):
            raise InvalidPathError("path repeats an edge label")
        return cls(
            source=source,
            edges=tuple(edge_ids),
            used_labels=frozenset(graph.edge(eid).label for eid in edge_ids),
        )

    def target(self, graph: LabeledDigraph) -> int:
        if not self.edges:
            return self.source
        return graph.edge(self.edges[-1]).target

    def vertices(self, graph: LabeledDigraph) -> List[int]:
        return [self.source] + [graph.edge(eid).target for eid in self.edges]

    def labels(self, graph: LabeledDigraph) -> List[int]:
        return [graph.edge(eid).label for eid in self.edges]

    def vertex_names(self, graph: LabeledDigraph) -> List[str]:
        return [graph.vertex_name(v) for v in self.vertices(graph)]

    def label_names(self, graph: LabeledDigraph) -> List[str]:
        return [graph.label_name(label) for label in self.labels(graph)]


def resolve_path(
    graph: LabeledDigraph, vertex_names: Sequence[str], label_names: Sequence[str]
) -> RainbowPath:
    """
    Rebuild a path from its printed vertex and label sequences.

    Each step picks the lowest edge id matching (vertex, next vertex, label).

    Raises:
        InvalidPathError: on length mismatch, a missing edge, or a repeated label
        UnknownVertexError: if a vertex name is not in the graph
    """
    if len(vertex_names) != len(label_names) + 1:
        raise InvalidPathError(
            f"{len(vertex_names)} vertices cannot carry {len(label_names)} labels"
        )
    vertices = [graph.vertex_id(name) for name in vertex_names]
    edge_ids: List[int] = []
    for step, label_name in enumerate(label_names):
        label = graph.label_id(label_name)
        match = None
        if label is not None:
            match = next(
                (
                    eid
                    for eid in graph.out_edges(vertices[step])
                    if graph.edge(eid).target == vertices[step + 1]
                    and graph.edge(eid).label == label
                ),
                None,
            )
        if match is None:
            raise InvalidPathError(
                f"no edge {vertex_names[step]} -> {vertex_names[step + 1]} "
                f"labeled '{label_name}'"
            )
        edge_ids.append(match)
    return RainbowPath.from_edges(graph, vertices[0], edge_ids)
