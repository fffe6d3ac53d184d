"""
Unit tests for the labeled multigraph model: interning, adjacency and paths.
"""

import pytest

from spul.graph.model import (
    GraphBuilder,
    NameTable,
    RainbowPath,
    build_graph,
    is_rainbow,
    resolve_path,
)
from spul.utils.exceptions import InvalidPathError, UnknownVertexError


class TestNameTable:
    """Test the name <-> id bijection."""

    def test_ids_follow_first_appearance(self):
        table = NameTable(["b", "a", "b", "c"])

        assert table.names() == ("b", "a", "c")
        assert table.id_of("a") == 1
        assert table.name_of(2) == "c"
        assert len(table) == 3

    def test_intern_is_idempotent(self):
        table = NameTable()

        assert table.intern("x") == 0
        assert table.intern("x") == 0
        assert "x" in table
        assert "y" not in table
        assert table.id_of("y") is None

    def test_suggest_close_names(self):
        table = NameTable(["glucose", "fructose", "pyruvate"])

        assert table.suggest("glucos")[0] == "glucose"
        assert table.suggest("zzzzzzzz") == []

    def test_suggest_on_empty_table(self):
        assert NameTable().suggest("anything") == []


class TestBuildGraph:
    """Test graph construction from triples."""

    def test_empty_graph(self):
        graph = build_graph([])

        assert graph.vertex_count == 0
        assert graph.edge_count == 0
        assert graph.label_count == 0

    def test_reference_network(self, detour_graph):
        assert detour_graph.vertex_count == 6
        assert detour_graph.edge_count == 6
        assert detour_graph.label_count == 4
        assert detour_graph.vertex_names == ("S", "A", "B", "T", "C", "D")

    def test_duplicate_triple_is_parallel_edge(self):
        graph = build_graph([("S", "A", "1"), ("S", "A", "1")])

        assert graph.vertex_count == 2
        assert graph.edge_count == 2
        assert graph.label_count == 1
        assert graph.out_edges(0) == (0, 1)

    def test_self_loop_allowed(self):
        graph = build_graph([("A", "A", "x")])

        assert graph.edge(0).source == graph.edge(0).target == 0

    def test_out_adjacency_in_insertion_order(self, detour_graph):
        a = detour_graph.vertex_id("A")

        assert detour_graph.out_edges(a) == (1, 3)
        assert all(
            detour_graph.edge(eid).source == a for eid in detour_graph.out_edges(a)
        )

    def test_rebuild_is_deterministic(self, detour_graph):
        rebuilt = build_graph(detour_graph.triples())

        assert rebuilt == detour_graph
        assert [rebuilt.out_edges(v) for v in range(rebuilt.vertex_count)] == [
            detour_graph.out_edges(v) for v in range(detour_graph.vertex_count)
        ]

    def test_name_round_trip(self, detour_graph):
        for name in detour_graph.vertex_names:
            assert detour_graph.vertex_name(detour_graph.vertex_id(name)) == name
        for name in detour_graph.label_names:
            assert detour_graph.label_name(detour_graph.label_id(name)) == name

    def test_unknown_vertex_suggests(self, detour_graph):
        with pytest.raises(UnknownVertexError) as excinfo:
            build_graph([("glucose", "pyruvate", "r1")]).vertex_id("glucse")

        assert "glucose" in excinfo.value.suggestions
        assert "did you mean" in str(excinfo.value)

    def test_unknown_vertex_without_suggestions(self, detour_graph):
        with pytest.raises(UnknownVertexError) as excinfo:
            detour_graph.vertex_id("NOPE")

        assert excinfo.value.name == "NOPE"

    def test_builder_keeps_isolated_vertices(self):
        builder = GraphBuilder()
        builder.add_vertex("lonely")
        graph = builder.build()

        assert graph.vertex_count == 1
        assert graph.out_edges(0) == ()

    def test_built_graph_is_detached_from_builder(self):
        builder = GraphBuilder()
        builder.add_edge("a", "b", "1")
        graph = builder.build()
        builder.add_edge("b", "c", "2")

        assert graph.vertex_count == 2
        assert graph.edge_count == 1


class TestRainbowPath:
    """Test path validation and rendering."""

    def test_from_edges_valid(self, detour_graph):
        path = RainbowPath.from_edges(detour_graph, 0, [0, 3, 4, 5])

        assert path.length == 4
        assert path.vertex_names(detour_graph) == ["S", "A", "C", "D", "T"]
        assert path.label_names(detour_graph) == ["1", "2", "3", "4"]
        assert len(path.used_labels) == path.length

    def test_repeated_label_rejected(self, detour_graph):
        with pytest.raises(InvalidPathError):
            RainbowPath.from_edges(detour_graph, 0, [0, 1, 2])

    def test_disconnected_edges_rejected(self, detour_graph):
        with pytest.raises(InvalidPathError):
            RainbowPath.from_edges(detour_graph, 0, [0, 4])

    def test_wrong_start_rejected(self, detour_graph):
        with pytest.raises(InvalidPathError):
            RainbowPath.from_edges(detour_graph, detour_graph.vertex_id("A"), [0])

    def test_missing_edge_rejected(self, detour_graph):
        with pytest.raises(InvalidPathError):
            RainbowPath.from_edges(detour_graph, 0, [99])

    def test_empty_path(self, detour_graph):
        path = RainbowPath.empty(0)

        assert path.length == 0
        assert path.target(detour_graph) == 0
        assert path.vertex_names(detour_graph) == ["S"]

    def test_vertices_may_repeat(self):
        graph = build_graph([("a", "b", "1"), ("b", "a", "2"), ("a", "b", "3")])
        path = RainbowPath.from_edges(graph, 0, [0, 1, 2])

        assert path.vertices(graph) == [0, 1, 0, 1]

    def test_is_rainbow(self, detour_graph):
        assert is_rainbow(detour_graph, [0, 3, 4, 5])
        assert not is_rainbow(detour_graph, [0, 1, 2])
        assert is_rainbow(detour_graph, [])


class TestResolvePath:
    """Test rebuilding paths from printed sequences."""

    def test_resolves_printed_witness(self, detour_graph):
        path = resolve_path(
            detour_graph, ["S", "A", "C", "D", "T"], ["1", "2", "3", "4"]
        )

        assert path.edges == (0, 3, 4, 5)

    def test_picks_lowest_parallel_edge(self, bundle_graph):
        path = resolve_path(bundle_graph, ["S", "A", "B"], ["2", "1"])

        assert path.edges == (1, 3)

    def test_length_mismatch(self, detour_graph):
        with pytest.raises(InvalidPathError):
            resolve_path(detour_graph, ["S", "A"], [])

    def test_missing_edge(self, detour_graph):
        with pytest.raises(InvalidPathError):
            resolve_path(detour_graph, ["S", "A"], ["4"])

    def test_unknown_label(self, detour_graph):
        with pytest.raises(InvalidPathError):
            resolve_path(detour_graph, ["S", "A"], ["nope"])
