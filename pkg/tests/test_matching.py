from itertools import chain, combinations

import pytest
from hypothesis import given

from ecockernel.matching import BipartiteGraph, find_vc_crown, is_vc_crown, max_matching
from ecockernel.oracle import OracleSizeError, brute_force_max_matching

from helpers import bipartite_graphs

STAR = BipartiteGraph.build(["a1", "a2", "a3"], ["b"], [("a1", "b"), ("a2", "b"), ("a3", "b")])
DISJOINT = BipartiteGraph.build(["a1", "a2", "a3"], ["b1", "b2", "b3"], [("a1", "b1"), ("a2", "b2"), ("a3", "b3")])
HEXAGON = BipartiteGraph.build(
    ["a1", "a2", "a3"],
    ["b1", "b2", "b3"],
    [("a1", "b1"), ("a2", "b1"), ("a2", "b2"), ("a3", "b2"), ("a3", "b3"), ("a1", "b3")],
)


def _is_matching(bg, pairs):
    return len(set(pairs.values())) == len(pairs) and all(b in bg.neighbors(a) for a, b in pairs.items())


@pytest.mark.parametrize("bg, expected", [(STAR, 1), (DISJOINT, 3), (HEXAGON, 3)])
def test_max_matching_examples(bg, expected):
    pairs = max_matching(bg)
    assert _is_matching(bg, pairs)
    assert len(pairs) == expected
    assert brute_force_max_matching(bg) == expected


def test_sides_must_be_disjoint():
    with pytest.raises(ValueError):
        BipartiteGraph.build(["x"], ["x"], [])
    with pytest.raises(ValueError):
        BipartiteGraph.build(["a"], ["b"], [("b", "a")])


def test_matching_is_deterministic():
    assert max_matching(HEXAGON) == max_matching(HEXAGON)
    # ascending order: a1 takes its first neighbour b1 in the first phase
    assert max_matching(HEXAGON)["a1"] == "b1"


@given(bipartite_graphs())
def test_max_matching_against_brute_force(bg):
    pairs = max_matching(bg)
    assert _is_matching(bg, pairs)
    assert len(pairs) == brute_force_max_matching(bg)


def test_crown_on_star():
    # |Z| = 2; alternating paths from the free a-vertices reach b, then its mate
    crown = find_vc_crown(STAR)
    assert crown is not None
    assert crown.i_side == ("a1", "a2", "a3")
    assert crown.j_side == ("b",)
    # the first a-vertex in order claims b, so it is the witness partner
    assert crown.witness == {"b": "a1"}


def test_crown_without_b_side():
    crown = find_vc_crown(BipartiteGraph.build(["a"], [], []))
    assert crown is not None
    assert crown.i_side == ("a",) and crown.j_side == () and crown.witness == {}


def test_no_crown_when_a_side_saturated():
    k22 = BipartiteGraph.build(["a1", "a2"], ["b1", "b2"], [(a, b) for a in ("a1", "a2") for b in ("b1", "b2")])
    assert find_vc_crown(k22) is None
    assert find_vc_crown(BipartiteGraph.build([], [], [])) is None


@given(bipartite_graphs())
def test_returned_crowns_satisfy_invariants(bg):
    crown = find_vc_crown(bg)
    if crown is None:
        assert len(max_matching(bg)) == len(bg.side_a)
        return
    assert is_vc_crown(bg, crown)
    assert len(crown.i_side) >= len(crown.j_side) + 1


def _has_strict_crown(bg):
    side_a = list(bg.side_a)
    subsets = chain.from_iterable(combinations(side_a, r) for r in range(1, len(side_a) + 1))
    for i0 in subsets:
        nbrs = {b for a in i0 for b in bg.neighbors(a)}
        if len(i0) >= len(nbrs) + 1:
            return True
    return False


@given(bipartite_graphs(max_total=10))
def test_crown_found_whenever_one_exists(bg):
    # with J0 = N(I0) the best choice, a strict crown exists iff some I0 has |I0| > |N(I0)|
    assert (find_vc_crown(bg) is not None) == _has_strict_crown(bg)


def test_brute_force_matching_guard():
    big = BipartiteGraph.build([f"a{i}" for i in range(7)], [f"b{i}" for i in range(6)], [])
    with pytest.raises(OracleSizeError):
        brute_force_max_matching(big)
    assert brute_force_max_matching(BipartiteGraph.build(["a"], ["b"], [])) == 0
