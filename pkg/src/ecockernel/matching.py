"""Maximum bipartite matching and VC crown extraction.

Vertices on the two sides may be any hashable, orderable labels as long as
the sides are disjoint. All iteration follows the declared side order, so
results are reproducible.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass, field

_INF = float("inf")


@dataclass(frozen=True)
class BipartiteGraph:
    side_a: tuple[Hashable, ...]
    side_b: tuple[Hashable, ...]
    edges: Mapping[Hashable, tuple[Hashable, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        a_set, b_set = set(self.side_a), set(self.side_b)
        if len(a_set) != len(self.side_a) or len(b_set) != len(self.side_b):
            raise ValueError("duplicate vertex on one side")
        if a_set & b_set:
            raise ValueError("sides of a bipartite graph must be disjoint")
        for a, bs in self.edges.items():
            if a not in a_set:
                raise ValueError(f"edge source {a!r} is not on side A")
            for b in bs:
                if b not in b_set:
                    raise ValueError(f"edge target {b!r} is not on side B")

    @classmethod
    def build(
        cls,
        side_a: Iterable[Hashable],
        side_b: Iterable[Hashable],
        edges: Iterable[tuple[Hashable, Hashable]],
    ) -> BipartiteGraph:
        side_a = tuple(side_a)
        side_b = tuple(side_b)
        order = {b: i for i, b in enumerate(side_b)}
        adj: dict[Hashable, set[Hashable]] = {a: set() for a in side_a}
        for a, b in edges:
            if a not in adj:
                raise ValueError(f"edge source {a!r} is not on side A")
            if b not in order:
                raise ValueError(f"edge target {b!r} is not on side B")
            adj[a].add(b)
        return cls(side_a, side_b, {a: tuple(sorted(bs, key=order.__getitem__)) for a, bs in adj.items()})

    def neighbors(self, a: Hashable) -> tuple[Hashable, ...]:
        return self.edges.get(a, ())

    @property
    def num_edges(self) -> int:
        return sum(len(bs) for bs in self.edges.values())


@dataclass(frozen=True)
class VcCrown:
    """Crown in a bipartite graph: ``N(i_side) ⊆ j_side`` and ``witness`` matches ``j_side`` into ``i_side``."""

    i_side: tuple[Hashable, ...]
    j_side: tuple[Hashable, ...]
    witness: Mapping[Hashable, Hashable]


def max_matching(bg: BipartiteGraph) -> dict[Hashable, Hashable]:
    """Maximum-cardinality matching as a map from A-vertices to B-vertices (Hopcroft-Karp)."""
    b_index = {b: j for j, b in enumerate(bg.side_b)}
    adj = [[b_index[b] for b in bg.neighbors(a)] for a in bg.side_a]
    na, nb = len(adj), len(bg.side_b)
    mate_a = [-1] * na
    mate_b = [-1] * nb
    dist = [0.0] * na

    def bfs() -> bool:
        queue: deque[int] = deque()
        for i in range(na):
            if mate_a[i] < 0:
                dist[i] = 0
                queue.append(i)
            else:
                dist[i] = _INF
        found = False
        while queue:
            i = queue.popleft()
            for j in adj[i]:
                nxt = mate_b[j]
                if nxt < 0:
                    found = True
                elif dist[nxt] == _INF:
                    dist[nxt] = dist[i] + 1
                    queue.append(nxt)
        return found

    def dfs(root: int) -> bool:
        # iterative layered DFS; recursion depth could reach |A|
        stack = [(root, iter(adj[root]))]
        path: list[tuple[int, int]] = []
        while stack:
            i, it = stack[-1]
            advanced = False
            for j in it:
                nxt = mate_b[j]
                if nxt < 0:
                    path.append((i, j))
                    for pi, pj in path:
                        mate_a[pi] = pj
                        mate_b[pj] = pi
                    return True
                if dist[nxt] == dist[i] + 1:
                    path.append((i, j))
                    stack.append((nxt, iter(adj[nxt])))
                    advanced = True
                    break
            if not advanced:
                dist[i] = _INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for i in range(na):
            if mate_a[i] < 0:
                dfs(i)

    return {bg.side_a[i]: bg.side_b[j] for i, j in enumerate(mate_a) if j >= 0}


def find_vc_crown(bg: BipartiteGraph, matching: Mapping[Hashable, Hashable] | None = None) -> VcCrown | None:
    """Crown reachable from the A-vertices left unsaturated by a maximum matching.

    Returns ``None`` exactly when the maximum matching saturates side A.
    Otherwise the crown has ``|i_side| >= |j_side| + 1``. A precomputed
    maximum ``matching`` may be supplied.
    """
    if matching is None:
        matching = max_matching(bg)
    mate_of_b = {b: a for a, b in matching.items()}
    free = [a for a in bg.side_a if a not in matching]
    if not free:
        return None

    reached_a = set(free)
    reached_b: set[Hashable] = set()
    queue = deque(free)
    while queue:
        a = queue.popleft()
        for b in bg.neighbors(a):
            if b in reached_b or matching.get(a) == b:
                continue
            reached_b.add(b)
            partner = mate_of_b.get(b)
            if partner is None:
                raise ValueError("matching is not maximum: found an augmenting path")
            if partner not in reached_a:
                reached_a.add(partner)
                queue.append(partner)

    i_side = tuple(a for a in bg.side_a if a in reached_a)
    j_side = tuple(b for b in bg.side_b if b in reached_b)
    return VcCrown(i_side, j_side, {b: mate_of_b[b] for b in j_side})


def is_vc_crown(bg: BipartiteGraph, crown: VcCrown) -> bool:
    i_set, j_set = set(crown.i_side), set(crown.j_side)
    if not i_set or not i_set <= set(bg.side_a) or not j_set <= set(bg.side_b):
        return False
    if any(b not in j_set for a in i_set for b in bg.neighbors(a)):
        return False
    if set(crown.witness) != j_set:
        return False
    targets = list(crown.witness.values())
    if len(set(targets)) != len(targets):
        return False
    return all(a in i_set and b in bg.neighbors(a) for b, a in crown.witness.items())

