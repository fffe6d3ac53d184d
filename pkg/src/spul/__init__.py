"""
Shortest paths with unique labels in directed labeled multigraphs.
"""

__version__ = "0.1.0"
