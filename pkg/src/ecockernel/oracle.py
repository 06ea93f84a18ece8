"""Exhaustive ground-truth solvers for small inputs.

Nothing here shares code with the kernelization path beyond the ``Graph``
container: connectivity is checked with a separate bitmask routine so the
oracle can be trusted to judge the kernelizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, Instance, VertexSet
from .matching import BipartiteGraph

ECOC_MAX_VERTICES = 22
IP_MAX_VERTICES = 16
MATCHING_MAX_VERTICES = 12


class OracleSizeError(ValueError):
    """Input exceeds the size an exhaustive search is allowed to handle."""


@dataclass(frozen=True)
class OracleAnswer:
    feasible: bool
    optimum: int | None = None
    witness: VertexSet | None = None


def _masks(g: Graph) -> tuple[list[int], list[int]]:
    verts = list(g.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    nbr = [0] * len(verts)
    for i, v in enumerate(verts):
        for u in g.neighbors(v):
            nbr[i] |= 1 << pos[u]
    return verts, nbr


def _component_sizes(nbr: list[int], alive: int) -> list[int]:
    sizes = []
    while alive:
        seed = alive & -alive
        comp = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            grow = nbr[low.bit_length() - 1] & alive & ~comp
            comp |= grow
            frontier |= grow
        sizes.append(bin(comp).count("1"))
        alive &= ~comp
    return sizes


def leaves_exact_components(g: Graph, deleted, l: int) -> bool:
    """True iff every component of ``g - deleted`` has exactly ``l`` vertices."""
    verts, nbr = _masks(g)
    pos = {v: i for i, v in enumerate(verts)}
    alive = (1 << len(verts)) - 1
    for v in deleted:
        alive &= ~(1 << pos[v])
    return all(s == l for s in _component_sizes(nbr, alive))


def brute_force_ecoc(inst: Instance, *, exhaustive: bool = False) -> OracleAnswer:
    """Decide the instance by trying deletion sets in order of increasing size.

    With ``exhaustive=True`` the search continues past ``k`` (up to ``n``) so
    ``optimum`` is always the true minimum; otherwise it stops at ``k`` and
    ``optimum`` is ``None`` when no solution within the budget exists.
    """
    g, k, l = inst.graph, inst.k, inst.l
    n = g.n
    if n > ECOC_MAX_VERTICES:
        raise OracleSizeError(f"brute-force l-ECOC is limited to {ECOC_MAX_VERTICES} vertices, got {n}")
    verts, nbr = _masks(g)
    full = (1 << n) - 1
    limit = n if exhaustive else min(k, n)
    for size in range(0, limit + 1):
        if (n - size) % l:
            continue
        for combo in combinations(range(n), size):
            alive = full
            for i in combo:
                alive &= ~(1 << i)
            if all(s == l for s in _component_sizes(nbr, alive)):
                return OracleAnswer(size <= k, size, tuple(verts[i] for i in combo))
    return OracleAnswer(False)


def _connected_masks(nbr: list[int], size: int) -> list[int]:
    n = len(nbr)
    out = []
    for combo in combinations(range(n), size):
        mask = 0
        for i in combo:
            mask |= 1 << i
        if _component_sizes(nbr, mask) == [size]:
            out.append(mask)
    return out


def connected_sets_by_filter(g: Graph, size: int) -> list[VertexSet]:
    """Every connected ``size``-set, found by testing all subsets."""
    verts, nbr = _masks(g)
    if size < 1 or size > len(verts):
        return []
    return sorted(
        tuple(verts[i] for i in range(len(verts)) if mask >> i & 1)
        for mask in _connected_masks(nbr, size)
    )


def brute_force_wecoc_ip(g: Graph, l: int) -> int:
    """Smallest vertex set meeting every connected ``(l+1)``-set."""
    n = g.n
    if n > IP_MAX_VERTICES:
        raise OracleSizeError(f"brute-force covering IP is limited to {IP_MAX_VERTICES} vertices, got {n}")
    _, nbr = _masks(g)
    targets = _connected_masks(nbr, l + 1) if l + 1 <= n else []
    if not targets:
        return 0
    for size in range(0, n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if all(t & mask for t in targets):
                return size
    raise AssertionError("deleting every vertex always meets all constraints")


def brute_force_max_matching(bg: BipartiteGraph) -> int:
    total = len(bg.side_a) + len(bg.side_b)
    if total > MATCHING_MAX_VERTICES:
        raise OracleSizeError(
            f"brute-force matching is limited to {MATCHING_MAX_VERTICES} vertices, got {total}"
        )
    side_a = list(bg.side_a)

    def best(i: int, used: frozenset) -> int:
        if i == len(side_a):
            return 0
        result = best(i + 1, used)
        for b in bg.neighbors(side_a[i]):
            if b not in used:
                result = max(result, 1 + best(i + 1, used | {b}))
        return result

    return best(0, frozenset())
