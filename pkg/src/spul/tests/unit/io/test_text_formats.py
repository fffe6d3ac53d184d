"""
Unit tests for the edge-list and DIMACS parsers.
"""

import pytest

from spul.io.diagnostics import ParseDiagnostic, Severity
from spul.io.dimacs import parse_dimacs, write_dimacs
from spul.io.edge_list import parse_edge_list, parse_name_list, write_edge_list
from spul.reduction.instance import SatInstance
from spul.utils.exceptions import DimacsParseError, EdgeListParseError


class TestParseEdgeList:
    """Test edge-list parsing."""

    def test_comments_and_blank_lines(self):
        graph, diagnostics = parse_edge_list("S\tA\t1\n# c\n\nA\tB\t2\n")

        assert graph.vertex_count == 3
        assert graph.edge_count == 2
        assert diagnostics == []

    def test_spaces_are_not_separators(self):
        with pytest.raises(EdgeListParseError) as excinfo:
            parse_edge_list("S A 1\n")

        assert excinfo.value.diagnostics[-1].line == 1
        assert excinfo.value.diagnostics[-1].severity is Severity.ERROR

    def test_error_line_number(self):
        with pytest.raises(EdgeListParseError) as excinfo:
            parse_edge_list("# header\nS\tA\t1\nA\tB\n")

        assert excinfo.value.diagnostics[-1].line == 3
        assert "line 3" in str(excinfo.value)

    def test_empty_field(self):
        with pytest.raises(EdgeListParseError):
            parse_edge_list("S\t\t1\n")

    @pytest.mark.parametrize(
        "line", ["S\tA\tEC 1;2\n", "S;1\tA\t1\n", "S\tA;B\t1\n"]
    )
    def test_semicolon_in_name_rejected(self, line):
        """Result files join names with ';', so such names could not be read back."""
        with pytest.raises(EdgeListParseError) as excinfo:
            parse_edge_list("# ok\n" + line)

        assert excinfo.value.diagnostics[-1].line == 2
        assert "contains ';'" in str(excinfo.value)

    def test_reference_file(self, detour_graph, detour_file):
        graph, _ = parse_edge_list(detour_file.read_text())

        assert graph == detour_graph

    def test_duplicate_is_warning(self):
        graph, diagnostics = parse_edge_list("S\tA\t1\nS\tA\t1\n")

        assert graph.edge_count == 2
        assert len(diagnostics) == 1
        assert diagnostics[0].line == 2
        assert diagnostics[0].severity is Severity.WARNING

    def test_empty_document(self):
        graph, diagnostics = parse_edge_list("")

        assert graph.vertex_count == 0
        assert diagnostics == []

    def test_round_trip(self, rng, random_graph):
        for _ in range(20):
            text = write_edge_list(random_graph(rng))
            graph, _ = parse_edge_list(text)
            assert write_edge_list(graph) == text
            assert parse_edge_list(write_edge_list(graph))[0] == graph

    def test_names_with_spaces_and_commas(self):
        line = "D-glucose 6-phosphate\tfructose, 6-P\tEC 5.3.1.9\n"
        graph, _ = parse_edge_list(line)

        assert graph.vertex_names == ("D-glucose 6-phosphate", "fructose, 6-P")
        assert write_edge_list(graph) == line


class TestParseNameList:
    """Test exclusion lists."""

    def test_names(self):
        assert parse_name_list("ATP\n# cofactors\n\n  H2O  \nNADH\n") == [
            "ATP",
            "H2O",
            "NADH",
        ]


class TestParseDiagnostic:
    """Test diagnostic rendering."""

    def test_str(self):
        assert str(ParseDiagnostic(4, "bad", Severity.ERROR)) == "line 4: error: bad"
        assert str(ParseDiagnostic(2, "dup")) == "line 2: warning: dup"


class TestDimacs:
    """Test DIMACS CNF parsing."""

    def test_unit_clause(self):
        instance = parse_dimacs("p cnf 1 1\n1 0\n")

        assert instance == SatInstance(1, ((1,),))

    def test_two_clauses(self):
        instance = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n")

        assert instance.clauses == ((1, 2), (-1, -2))

    def test_out_of_range(self):
        with pytest.raises(DimacsParseError) as excinfo:
            parse_dimacs("p cnf 1 1\n2 0\n")

        assert excinfo.value.diagnostics[0].line == 2

    def test_missing_header(self):
        with pytest.raises(DimacsParseError):
            parse_dimacs("1 2 0\n")

    def test_empty_document(self):
        with pytest.raises(DimacsParseError):
            parse_dimacs("c only a comment\n")

    def test_unterminated_clause(self):
        with pytest.raises(DimacsParseError) as excinfo:
            parse_dimacs("p cnf 2 2\n1 0\n2 -1\n")

        assert excinfo.value.diagnostics[0].line == 3

    def test_comments_and_multiline_clauses(self):
        text = "c example\np cnf 3 2\n1 -2\n3 0\nc between\n-3 0\n"
        instance = parse_dimacs(text)

        assert instance.clauses == ((1, -2, 3), (-3,))

    def test_percent_terminates(self):
        instance = parse_dimacs("p cnf 1 1\n1 0\n%\n0\n")

        assert instance.clauses == ((1,),)

    def test_clause_count_mismatch_is_tolerated(self):
        assert parse_dimacs("p cnf 2 3\n1 0\n").num_clauses == 1

    def test_bad_token(self):
        with pytest.raises(DimacsParseError):
            parse_dimacs("p cnf 2 1\n1 x 0\n")

    def test_bad_header(self):
        with pytest.raises(DimacsParseError):
            parse_dimacs("p dnf 2 1\n1 0\n")

    def test_empty_clause(self):
        with pytest.raises(DimacsParseError):
            parse_dimacs("p cnf 2 1\n0\n")

    def test_write_then_parse(self):
        instance = SatInstance(3, ((1, -2, 3), (-1,)))

        assert write_dimacs(instance) == "p cnf 3 2\n1 -2 3 0\n-1 0\n"
        assert parse_dimacs(write_dimacs(instance)) == instance
