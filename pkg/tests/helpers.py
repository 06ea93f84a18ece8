"""Graph builders, hypothesis strategies and an independent LP oracle for tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from ecockernel.graph import Graph, Instance
from ecockernel.matching import BipartiteGraph


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def star_graph(leaves: int) -> Graph:
    """Centre 0, leaves 1..leaves."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def instances(draw, max_n: int = 10, max_l: int = 3, max_k: int = 4) -> Instance:
    g = draw(graphs(max_n=max_n))
    return Instance(g, draw(st.integers(0, max_k)), draw(st.integers(1, max_l)))


@st.composite
def bipartite_graphs(draw, max_total: int = 12) -> BipartiteGraph:
    na = draw(st.integers(0, max_total))
    nb = draw(st.integers(0, max_total - na))
    side_a = [f"a{i}" for i in range(na)]
    side_b = [f"b{j}" for j in range(nb)]
    pairs = [(a, b) for a in side_a for b in side_b]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return BipartiteGraph.build(side_a, side_b, chosen)


def _solve_square(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan over the rationals; ``None`` when singular."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def lp_optimum_by_vertices(n: int, constraints: list[tuple[int, ...]]) -> Fraction:
    """Minimum of ``sum x`` over ``{x in [0,1]^n : sum_C x >= 1}`` by enumerating vertices.

    Every basic solution is obtained by making ``n`` linearly independent
    inequalities tight; the minimum over the feasible ones is the optimum.
    The bounds ``x <= 1`` are left out of the tight-set candidates: lowering
    any value above one keeps feasibility, so they never bind at an optimum.
    """
    rows: list[tuple[list[Fraction], Fraction]] = []
    for c in constraints:
        rows.append(([Fraction(1 if v in c else 0) for v in range(n)], Fraction(1)))
    for v in range(n):
        unit = [Fraction(1 if u == v else 0) for u in range(n)]
        rows.append((unit, Fraction(0)))
    best = None
    for choice in combinations(rows, n):
        x = _solve_square([r for r, _ in choice], [b for _, b in choice])
        if x is None:
            continue
        if any(xv < 0 for xv in x):
            continue
        if any(sum(x[v] for v in c) < 1 for c in constraints):
            continue
        value = sum(x, Fraction(0))
        if best is None or value < best:
            best = value
    assert best is not None or n == 0
    return best if best is not None else Fraction(0)
