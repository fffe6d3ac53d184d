"""
Reduce Command Handler.
Encodes a DIMACS formula as an edge-list graph plus its map file.
"""

from argparse import Namespace

from ...io.dimacs import parse_dimacs
from ...io.edge_list import write_edge_list
from ...io.map_file import write_map
from ...reduction.encoder import encode
from .base_handler import EXIT_OK, BaseHandler


class ReduceHandler(BaseHandler):
    command = "reduce"

    def handle(self, args: Namespace) -> int:
        instance = parse_dimacs(self.read_text(args.cnf))
        rmap = encode(instance)
        graph = rmap.graph

        self.write_text(write_edge_list(graph), args.graph_out)
        self.write_text(write_map(rmap), args.map_out)
        self.console.print(
            f"✅ {instance.num_variables} variables, {instance.num_clauses} clauses "
            f"-> {graph.vertex_count} vertices, {graph.edge_count} edges, "
            f"{graph.label_count} labels; every "
            f"{graph.vertex_name(rmap.source)}-{graph.vertex_name(rmap.sink)} path "
            f"has {rmap.path_length} edges"
        )
        return EXIT_OK
