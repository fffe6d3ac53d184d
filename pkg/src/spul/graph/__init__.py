"""
Graph module for the SPUL toolkit.
Directed labeled multigraph shared by all algorithms.
"""

from .model import (
    Edge,
    GraphBuilder,
    LabeledDigraph,
    NameTable,
    RainbowPath,
    build_graph,
    is_rainbow,
    resolve_path,
)
from .transform import (
    CompressedArc,
    compress_parallel,
    with_reverse_edges,
    without_vertices,
)

__all__ = [
    "CompressedArc",
    "Edge",
    "GraphBuilder",
    "LabeledDigraph",
    "NameTable",
    "RainbowPath",
    "build_graph",
    "compress_parallel",
    "is_rainbow",
    "resolve_path",
    "with_reverse_edges",
    "without_vertices",
]
