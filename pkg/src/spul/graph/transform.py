"""
Graph transformations: parallel-edge compression, currency-metabolite
removal and reversible-reaction expansion.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .model import GraphBuilder, LabeledDigraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompressedArc:
    """Super-edge for one ordered vertex pair, labeled with all its parallel edges."""

    source: int
    target: int
    label_set: FrozenSet[int]
    edge_ids: Tuple[int, ...]

    def edge_for_label(self, graph: LabeledDigraph, label: int) -> int:
        """Lowest underlying edge id that carries `label`."""
        for eid in self.edge_ids:
            if graph.edge(eid).label == label:
                return eid
        raise KeyError(f"label {label} not on arc {self.source}->{self.target}")


def compress_parallel(graph: LabeledDigraph) -> List[CompressedArc]:
    """
    Merge parallel edges into one arc per ordered vertex pair.

    Arcs are ordered by the first edge of each pair; label sets are
    deduplicated while every underlying edge id is kept.
    """
    grouped: Dict[Tuple[int, int], List[int]] = {}
    for edge in graph.edges:
        grouped.setdefault((edge.source, edge.target), []).append(edge.id)

    arcs = [
        CompressedArc(
            source=source,
            target=target,
            label_set=frozenset(graph.edge(eid).label for eid in edge_ids),
            edge_ids=tuple(edge_ids),
        )
        for (source, target), edge_ids in grouped.items()
    ]
    logger.debug(f"Compressed {graph.edge_count} edges into {len(arcs)} arcs")
    return arcs


def without_vertices(graph: LabeledDigraph, names: Iterable[str]) -> LabeledDigraph:
    """
    Drop every edge touching one of the named vertices.

    Used to strip currency metabolites (ATP, H2O, ...) that create
    biologically meaningless shortcuts. Vertices left without edges
    disappear from the rebuilt graph; unknown names are ignored.
    """
    excluded = set(names)
    unknown = sorted(name for name in excluded if not graph.has_vertex(name))
    if unknown:
        logger.warning(f"Ignoring exclusions not in graph: {', '.join(unknown)}")

    builder = GraphBuilder()
    dropped = 0
    for source, target, label in graph.triples():
        if source in excluded or target in excluded:
            dropped += 1
            continue
        builder.add_edge(source, target, label)
    logger.info(f"Excluded {len(excluded)} vertices, dropping {dropped} edges")
    return builder.build()


def with_reverse_edges(graph: LabeledDigraph) -> LabeledDigraph:
    """
    Treat every reaction as reversible.

    Appends v->u with the same label for each edge u->v, unless that exact
    triple is already present. Original edges keep their ids.
    """
    triples = graph.triples()
    present = set(triples)
    builder = GraphBuilder()
    for name in graph.vertex_names:
        builder.add_vertex(name)
    for source, target, label in triples:
        builder.add_edge(source, target, label)
    added = 0
    for source, target, label in triples:
        reverse = (target, source, label)
        if reverse in present:
            continue
        present.add(reverse)
        builder.add_edge(*reverse)
        added += 1
    logger.info(f"Added {added} reverse edges")
    return builder.build()
