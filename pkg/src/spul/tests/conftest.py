"""
Shared fixtures: the small reference networks and random graph factories.
"""

import logging
import random

import pytest

from spul.graph.model import GraphBuilder, LabeledDigraph, build_graph

# A feasible path must avoid S->A->B->T, which passes label 1 twice
DETOUR_TRIPLES = [
    ("S", "A", "1"),
    ("A", "B", "2"),
    ("B", "T", "1"),
    ("A", "C", "2"),
    ("C", "D", "3"),
    ("D", "T", "4"),
]

DETOUR_TSV = "".join(f"{s}\t{t}\t{label}\n" for s, t, label in DETOUR_TRIPLES)

# Two bundles of three parallel edges with the same three labels
BUNDLE_TRIPLES = [
    ("S", "A", "1"),
    ("S", "A", "2"),
    ("S", "A", "3"),
    ("A", "B", "1"),
    ("A", "B", "2"),
    ("A", "B", "3"),
]


def make_random_graph(
    rng: random.Random,
    max_vertices: int = 8,
    max_edges: int = 20,
    max_labels: int = 6,
) -> LabeledDigraph:
    """Random multigraph on v0..v{n-1}; every vertex exists even without edges."""
    builder = GraphBuilder()
    n = rng.randint(1, max_vertices)
    for index in range(n):
        builder.add_vertex(f"v{index}")
    labels = rng.randint(1, max_labels)
    for _ in range(rng.randint(0, max_edges)):
        builder.add_edge(
            f"v{rng.randrange(n)}", f"v{rng.randrange(n)}", f"l{rng.randrange(labels)}"
        )
    return builder.build()


def make_staged_graph(stages: int, labels_per_stage: int) -> LabeledDigraph:
    """Chain v0 -> v1 -> ... with one bundle of parallel edges per stage."""
    return build_graph(
        (f"v{k - 1}", f"v{k}", f"{k}.{j}")
        for k in range(1, stages + 1)
        for j in range(1, labels_per_stage + 1)
    )


@pytest.fixture
def detour_graph():
    return build_graph(DETOUR_TRIPLES)


@pytest.fixture
def bundle_graph():
    return build_graph(BUNDLE_TRIPLES)


@pytest.fixture
def detour_file(tmp_path):
    path = tmp_path / "detour.tsv"
    path.write_text(DETOUR_TSV, encoding="utf-8")
    return path


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def random_graph():
    """Factory fixture: random_graph(rng, **limits) -> LabeledDigraph."""
    return make_random_graph


@pytest.fixture
def staged_graph():
    """Factory fixture: staged_graph(stages, labels_per_stage) -> LabeledDigraph."""
    return make_staged_graph


@pytest.fixture(autouse=True)
def restore_logging():
    """`main` and `setup_logging` reconfigure the root logger; undo that per test."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    app_level = logging.getLogger("spul").level
    yield
    for handler in root.handlers[:]:
        root.removeHandler(handler)
        if handler not in handlers:
            handler.close()
    for handler in handlers:
        root.addHandler(handler)
    root.setLevel(level)
    logging.getLogger("spul").setLevel(app_level)
