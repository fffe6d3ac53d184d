"""
Rich summaries printed to standard error next to the data on standard output.
"""

from typing import Dict, Optional, TextIO

from rich import box
from rich.console import Console
from rich.table import Table

from ..cli.bench import BenchReport
from ..graph.model import LabeledDigraph
from ..oracle.rainbow import RainbowCount
from ..search.results import SearchResult, TargetStatus

STATUS_STYLES = {
    TargetStatus.FOUND: "green",
    TargetStatus.UNREACHABLE: "dim",
    TargetStatus.NOT_FOUND_BEFORE_BUDGET: "yellow",
}


def create_console(file: Optional[TextIO] = None) -> Console:
    """Console for humans; stderr unless a file is given (tests pass StringIO)."""
    if file is not None:
        return Console(file=file)
    return Console(stderr=True)


def _counter_table(title: str) -> Table:
    table = Table(title=title, box=box.ROUNDED, show_header=False, title_justify="left")
    table.add_column("counter", style="bold bright_blue")
    table.add_column("value", justify="right")
    return table


def solve_summary(result: SearchResult, graph: LabeledDigraph) -> Table:
    table = _counter_table(
        f"Algorithm {result.algorithm.upper()}"
        f"{' + preprocessing' if result.preprocessed else ''} "
        f"from {graph.vertex_name(result.source)}"
    )
    counts = {status: 0 for status in TargetStatus}
    for entry in result.targets.values():
        counts[entry.status] += 1
    for status, count in counts.items():
        table.add_row(f"[{STATUS_STYLES[status]}]{status.value}[/]", str(count))
    table.add_row("paths found", str(result.paths_found))
    table.add_row("from preprocessing", str(result.early_found))
    table.add_row("nodes allocated", str(result.nodes_allocated))
    table.add_row("aborted", "[yellow]yes[/yellow]" if result.aborted else "no")
    table.add_row("seconds", f"{result.elapsed_seconds:.3f}")
    return table


def bench_summary(report: BenchReport) -> Table:
    """Per-source counts with a closing totals row."""
    table = Table(
        title=f"BFS shortest paths vs. SPUL (algorithm {report.algorithm.upper()})",
        box=box.ROUNDED,
        title_justify="left",
    )
    table.add_column("source", style="bold")
    for column in ("SP", "correct", "infeasible", "SPUL", "nodes"):
        table.add_column(column, justify="right")
    table.add_column("seconds", justify="right")

    for row in report.rows + [report.totals()]:
        table.add_row(
            row.source,
            str(row.sp_total),
            str(row.sp_correct),
            str(row.sp_infeasible),
            str(row.spul_found),
            str(row.nodes_allocated) + (" [yellow]*[/yellow]" if row.aborted else ""),
            f"{row.elapsed_seconds:.3f}",
            end_section=row is report.rows[-1] if report.rows else False,
        )
    return table


def oracle_summary(
    counts: Dict[int, RainbowCount], graph: LabeledDigraph, source: int
) -> Table:
    table = Table(
        title=f"Rainbow paths from {graph.vertex_name(source)}",
        box=box.ROUNDED,
        title_justify="left",
    )
    table.add_column("target", style="bold")
    table.add_column("distance", justify="right")
    table.add_column("optimal paths", justify="right")
    for vertex, entry in counts.items():
        table.add_row(graph.vertex_name(vertex), str(entry.distance), str(entry.count))
    return table
