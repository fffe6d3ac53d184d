"""
Matching-based decision for systems of distinct representatives.

An SDR exists iff the bipartite graph positions <-> labels has a matching
that saturates every position (Hall's condition).
"""

from typing import Iterable, Sequence

import networkx as nx
from networkx.algorithms import bipartite


def sdr_matching(sets: Sequence[Iterable[int]]) -> bool:
    """True iff a maximum matching covers every position."""
    if not sets:
        return True

    positions = [("position", index) for index in range(len(sets))]
    graph = nx.Graph()
    graph.add_nodes_from(positions, bipartite=0)
    for position, labels in zip(positions, sets):
        for label in labels:
            graph.add_node(("label", label), bipartite=1)
            graph.add_edge(position, ("label", label))

    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=positions)
    return all(position in matching for position in positions)
