"""
Search module for the SPUL toolkit.
Plain BFS, Algorithm A (edge tree), Algorithm B (compressed arcs) and preprocessing.
"""

from .bfs import BfsEntry, bfs, bfs_path
from .compressed_search import CompressedNode, alg_b, sdr_backtrack
from .preprocess import PreprocessResult, preprocess
from .results import SearchBudget, SearchResult, TargetResult, TargetStatus
from .solver import ALGORITHMS, get_algorithm, solve
from .tree_search import SearchTreeNode, alg_a

__all__ = [
    "ALGORITHMS",
    "BfsEntry",
    "CompressedNode",
    "PreprocessResult",
    "SearchBudget",
    "SearchResult",
    "SearchTreeNode",
    "TargetResult",
    "TargetStatus",
    "alg_a",
    "alg_b",
    "bfs",
    "bfs_path",
    "get_algorithm",
    "preprocess",
    "sdr_backtrack",
    "solve",
]
