from fractions import Fraction

import pytest

from ecockernel.fileformat import InstanceParseError, emit_instance, parse_instance
from ecockernel.generators import gen_planted, gen_random
from ecockernel.graph import Graph, Instance, remove_vertices

from helpers import path_graph


def test_parse_examples():
    assert parse_instance("p ecoc 2 1 2 0\ne 1 2\n") == Instance(path_graph(2), 0, 2)
    inst = parse_instance("p ecoc 0 0 1 0")
    assert inst.graph.n == 0 and inst.k == 0 and inst.l == 1


def test_comments_and_blank_lines_are_ignored():
    text = "c hello\n\np ecoc 3 2 1 1\nc between\ne 1 2\n  e 3 2  \n"
    assert parse_instance(text) == Instance(path_graph(3), 1, 1)


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("e 1 2\n", 1),
        ("c x\np ecoc 2 1\n", 2),
        ("p ecoc 2 1 0 0\ne 1 2\n", 1),
        ("p ecoc 2 1 1 -1\ne 1 2\n", 1),
        ("p ecoc 2 1 1 0\ne 1 3\n", 2),
        ("p ecoc 2 1 1 0\ne 2 2\n", 2),
        ("p ecoc 2 2 1 0\ne 1 2\ne 2 1\n", 3),
        ("p ecoc 2 1 1 0\np ecoc 2 1 1 0\n", 2),
        ("p ecoc 2 1 1 0\nx 1 2\n", 2),
        ("p ecoc 2 2 1 0\ne 1 2\n", 2),
        ("p ecoc 2 1 1 0\ne 1 b\n", 2),
        ("c only a comment\n", 1),
    ],
)
def test_parse_errors_name_the_line(text, lineno):
    with pytest.raises(InstanceParseError) as info:
        parse_instance(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}:" in str(info.value)


def test_emit_examples():
    assert emit_instance(Instance(Graph.from_edges(0, []), 4, 3)) == "p ecoc 0 0 3 4\n"
    assert emit_instance(Instance(path_graph(2), 0, 2)) == "p ecoc 2 1 2 0\ne 1 2\n"


def test_emit_renumbers_sparse_ids():
    g = remove_vertices(path_graph(4), [0])
    text = emit_instance(Instance(g, 1, 2))
    assert text.splitlines() == [
        "p ecoc 3 2 2 1",
        "c vertex 1 2",
        "c vertex 2 3",
        "c vertex 3 4",
        "e 1 2",
        "e 2 3",
    ]
    assert parse_instance(text) == Instance(path_graph(3), 1, 2)


def _corpus():
    for seed in range(50):
        yield gen_planted(seed % 5, 1 + seed % 3, seed % 4, Fraction(1, 3), seed)
        yield gen_random(seed % 15, Fraction(1, 4), 1 + seed % 3, seed % 5, seed)


def test_round_trip_fixpoint_on_corpus():
    corpus = list(_corpus())
    assert len(corpus) == 100
    for inst in corpus:
        text = emit_instance(inst)
        parsed = parse_instance(text)
        assert parsed == inst
        assert emit_instance(parsed) == text
        edge_lines = [tuple(map(int, ln.split()[1:])) for ln in text.splitlines() if ln.startswith("e ")]
        assert edge_lines == sorted(edge_lines)
