"""
CNF -> SPUL reduction and its inverse.

The graph runs left to right from s: one gadget per variable, then one per
clause, ending at t.

- Variable gadget for x_j: two vertex-disjoint chains of m edges (one per
  clause index i). The positive chain's edge i is labeled "j.i.p", the
  negative chain's "j.i.n".
- Clause gadget for C_i: one parallel edge per literal; a literal over x_j
  is labeled "j.i.p" if unnegated and "j.i.n" if negated.

Walking x_j's positive chain uses up every "j.·.p" label, so the clauses can
then only be passed through negated literals of x_j: the positive chain
encodes x_j = false and the negative chain x_j = true. A rainbow s-t path
exists iff the formula is satisfiable.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..graph.model import GraphBuilder, LabeledDigraph, RainbowPath, resolve_path
from ..search.tree_search import alg_a
from ..utils.exceptions import (
    DecodeError,
    GraphError,
    InvalidPathError,
    OracleLimitError,
)
from .instance import Assignment, SatInstance, literal_positive, literal_variable

logger = logging.getLogger(__name__)

SOURCE_NAME = "s"
SINK_NAME = "t"


def chain_label(variable: int, clause: int, positive: bool) -> str:
    return f"{variable}.{clause}.{'p' if positive else 'n'}"


@dataclass(frozen=True)
class ReductionMap:
    """
    The encoded graph plus the bookkeeping that links edges back to literals.

    positive_chains[j - 1] / negative_chains[j - 1] hold the edge ids of
    x_j's chains in path order. gadget_boundaries lists s, the vertex after
    each gadget, and so ends with t.
    """

    instance: SatInstance
    graph: LabeledDigraph
    source: int
    sink: int
    positive_chains: Tuple[Tuple[int, ...], ...]
    negative_chains: Tuple[Tuple[int, ...], ...]
    gadget_boundaries: Tuple[int, ...]

    @property
    def path_length(self) -> int:
        """Edge count of every s-t path: n*m + m."""
        m = self.instance.num_clauses
        return self.instance.num_variables * m + m


def _boundary_names(gadgets: int) -> List[str]:
    names = [SOURCE_NAME]
    names.extend(f"b{k}" for k in range(1, gadgets))
    if gadgets:
        names.append(SINK_NAME)
    return names


def encode(instance: SatInstance) -> ReductionMap:
    """
    Build the SPUL instance for a CNF formula.

    With no clauses there are no edges at all: the graph is the single
    vertex s and the sink is the source.
    """
    n, m = instance.num_variables, instance.num_clauses
    variable_gadgets = n if m > 0 else 0
    boundaries = _boundary_names(variable_gadgets + m)

    builder = GraphBuilder()
    builder.add_vertex(SOURCE_NAME)
    positive_chains: List[Tuple[int, ...]] = []
    negative_chains: List[Tuple[int, ...]] = []

    for j in range(1, variable_gadgets + 1):
        start, end = boundaries[j - 1], boundaries[j]
        for positive, chains in ((True, positive_chains), (False, negative_chains)):
            tag = "p" if positive else "n"
            stops = [start] + [f"x{j}{tag}{i}" for i in range(1, m)] + [end]
            chains.append(
                tuple(
                    builder.add_edge(
                        stops[i - 1], stops[i], chain_label(j, i, positive)
                    )
                    for i in range(1, m + 1)
                )
            )
    if variable_gadgets == 0:
        # chains exist but are empty when m == 0
        positive_chains = [() for _ in range(n)]
        negative_chains = [() for _ in range(n)]

    for i, clause in enumerate(instance.clauses, start=1):
        start = boundaries[variable_gadgets + i - 1]
        end = boundaries[variable_gadgets + i]
        for literal in clause:
            builder.add_edge(
                start,
                end,
                chain_label(literal_variable(literal), i, literal_positive(literal)),
            )

    graph = builder.build()
    rmap = ReductionMap(
        instance=instance,
        graph=graph,
        source=graph.vertex_id(SOURCE_NAME),
        sink=graph.vertex_id(boundaries[-1]),
        positive_chains=tuple(positive_chains),
        negative_chains=tuple(negative_chains),
        gadget_boundaries=tuple(graph.vertex_id(name) for name in boundaries),
    )
    logger.info(
        f"Encoded {n} variables / {m} clauses as {graph!r}, s-t paths have "
        f"{rmap.path_length} edges"
    )
    return rmap


def decode(rmap: ReductionMap, path: RainbowPath) -> Assignment:
    """
    Read the truth assignment off a rainbow s-t path.

    x_j is true iff the path walks x_j's negative chain.

    Raises:
        DecodeError: if the path is not a rainbow s-t path of this graph, or
            the decoded assignment does not satisfy the formula
    """
    graph = rmap.graph
    if path.source != rmap.source:
        raise DecodeError("path does not start at s")
    try:
        RainbowPath.from_edges(graph, path.source, path.edges)
    except InvalidPathError as e:
        raise DecodeError(f"path is infeasible: {e}") from e
    if path.target(graph) != rmap.sink:
        raise DecodeError("path does not end at t")

    used = set(path.edges)
    assignment = tuple(
        any(eid in used for eid in chain) for chain in rmap.negative_chains
    )
    if not rmap.instance.is_satisfied_by(assignment):
        raise DecodeError("decoded assignment does not satisfy the formula")
    return assignment


def rainbow_iff_sat(
    instance: SatInstance, max_variables: int = 10, max_clauses: int = 8
) -> Tuple[bool, bool]:
    """
    Run both sides of the reduction on one formula.

    Returns:
        (a rainbow s-t path exists in encode(instance),
         sat_brute_force finds a satisfying assignment)

    Raises:
        OracleLimitError: if the formula exceeds the harness limits
    """
    # imported here: the oracle package depends on this one
    from ..oracle.sat import sat_brute_force

    if instance.num_variables > max_variables:
        raise OracleLimitError("variables", instance.num_variables, max_variables)
    if instance.num_clauses > max_clauses:
        raise OracleLimitError("clauses", instance.num_clauses, max_clauses)

    rmap = encode(instance)
    result = alg_a(rmap.graph, rmap.source, targets={rmap.sink})
    return result.targets[rmap.sink].found, sat_brute_force(instance) is not None


def decode_named_path(
    rmap: ReductionMap, vertex_names: Sequence[str], label_names: Sequence[str]
) -> Assignment:
    """Decode a path given in printed form (as read back from a result file)."""
    try:
        path = resolve_path(rmap.graph, vertex_names, label_names)
    except GraphError as e:
        raise DecodeError(f"path is infeasible: {e}") from e
    return decode(rmap, path)
