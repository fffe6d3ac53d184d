"""
Unit tests for the brute-force oracles and their agreement with the searches.
"""

import random

import pytest

from spul.graph.model import build_graph
from spul.oracle.matching import sdr_matching
from spul.oracle.rainbow import OracleLimits, RainbowCount, enumerate_rainbow
from spul.oracle.sat import check_assignment, sat_brute_force
from spul.reduction.instance import SatInstance
from spul.search.compressed_search import alg_b, sdr_backtrack
from spul.search.tree_search import alg_a
from spul.utils.exceptions import ConfigurationError, OracleLimitError


def found_distances(result):
    return {v: e.distance for v, e in result.targets.items() if e.found}


class TestEnumerateRainbow:
    """Test exhaustive rainbow-path enumeration."""

    def test_reference_network(self, detour_graph):
        counts = enumerate_rainbow(detour_graph, 0)

        assert counts[detour_graph.vertex_id("T")] == RainbowCount(4, 1)
        assert counts[0] == RainbowCount(0, 1)

    def test_counts_all_optimal_paths(self, bundle_graph):
        counts = enumerate_rainbow(bundle_graph, 0)

        assert counts[bundle_graph.vertex_id("B")] == RainbowCount(2, 6)
        assert counts[bundle_graph.vertex_id("A")] == RainbowCount(1, 3)

    def test_source_without_out_edges(self, detour_graph):
        t = detour_graph.vertex_id("T")

        assert enumerate_rainbow(detour_graph, t) == {t: RainbowCount(0, 1)}

    def test_sorted_by_vertex(self, detour_graph):
        assert list(enumerate_rainbow(detour_graph, 0)) == sorted(range(6))

    @pytest.mark.parametrize(
        "limits, limit",
        [
            (OracleLimits(max_vertices=5), "vertices"),
            (OracleLimits(max_edges=5), "edges"),
            (OracleLimits(max_labels=3), "labels"),
        ],
    )
    def test_limits_enforced(self, detour_graph, limits, limit):
        with pytest.raises(OracleLimitError) as excinfo:
            enumerate_rainbow(detour_graph, 0, limits)

        assert excinfo.value.limit == limit

    def test_limits_must_be_positive(self):
        with pytest.raises(ConfigurationError):
            OracleLimits(max_edges=0)

    def test_agrees_with_both_searches(self, rng, random_graph):
        for _ in range(100):
            graph = random_graph(rng)
            oracle = {v: c.distance for v, c in enumerate_rainbow(graph, 0).items()}

            assert found_distances(alg_a(graph, 0)) == oracle
            assert found_distances(alg_b(graph, 0)) == oracle


class TestSdrMatching:
    """Test the matching-based SDR decision."""

    def test_pigeonhole(self):
        assert sdr_matching([{1}, {1}]) is False

    def test_cycle(self):
        assert sdr_matching([{1, 2}, {2, 3}, {3, 1}]) is True

    def test_empty(self):
        assert sdr_matching([]) is True

    def test_empty_set(self):
        assert sdr_matching([{1, 2}, set()]) is False

    def test_agrees_with_backtracking(self):
        rng = random.Random(7)
        for _ in range(300):
            universe = rng.randint(1, 8)
            sets = [
                {rng.randrange(universe) for _ in range(rng.randint(0, universe))}
                for _ in range(rng.randint(0, 8))
            ]
            assert sdr_matching(sets) == (sdr_backtrack(sets) is not None)


class TestSatBruteForce:
    """Test exhaustive satisfiability."""

    def test_contradiction(self):
        assert sat_brute_force(SatInstance(1, ((1,), (-1,)))) is None

    def test_lexicographic_first(self):
        assert sat_brute_force(SatInstance(3, ((1, 2, 3),))) == (False, False, True)

    def test_empty_formula(self):
        assert sat_brute_force(SatInstance(0, ())) == ()

    def test_variable_limit(self):
        with pytest.raises(OracleLimitError):
            sat_brute_force(SatInstance(21, ((1,),)))

    def test_custom_limit(self):
        with pytest.raises(OracleLimitError):
            sat_brute_force(SatInstance(3, ((1,),)), max_variables=2)

    def test_check_assignment(self):
        instance = SatInstance(2, ((1, 2), (-1, -2)))

        assert check_assignment(instance, (True, False))
        assert not check_assignment(instance, (True, True))

    def test_answer_satisfies(self):
        instance = SatInstance(4, ((1, -2), (2, 3), (-3, 4), (-4, -1)))
        assignment = sat_brute_force(instance)

        assert assignment is not None
        assert instance.is_satisfied_by(assignment)


class TestOracleOnSmallGraphs:
    """Spot checks on hand-made graphs."""

    def test_self_loop_never_helps(self):
        graph = build_graph([("s", "s", "1"), ("s", "t", "2")])
        counts = enumerate_rainbow(graph, 0)

        assert counts[1] == RainbowCount(1, 1)
        assert counts[0] == RainbowCount(0, 1)

