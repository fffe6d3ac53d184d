"""
IO module for the SPUL toolkit.
Parsers and writers for edge lists, DIMACS CNF, results, maps and bench reports.
"""

from .bench_file import write_bench
from .diagnostics import ParseDiagnostic, Severity
from .dimacs import parse_dimacs, write_dimacs
from .edge_list import parse_edge_list, parse_name_list, write_edge_list
from .map_file import read_map, write_map
from .result_file import ResultRow, read_result, write_result

__all__ = [
    "ParseDiagnostic",
    "ResultRow",
    "Severity",
    "parse_dimacs",
    "parse_edge_list",
    "parse_name_list",
    "read_map",
    "read_result",
    "write_bench",
    "write_dimacs",
    "write_edge_list",
    "write_map",
    "write_result",
]
