"""Immutable undirected simple graphs and the problem instance type.

Vertex sets are represented as sorted, duplicate-free tuples of ints so
that structural equality coincides with set equality.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Iterator, Mapping
from dataclasses import dataclass

VertexSet = tuple[int, ...]


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Canonical sorted tuple of the given vertices."""
    return tuple(sorted(set(vertices)))


class Graph:
    """Undirected simple graph over integer vertex ids.

    Instances never change after construction; every deletion returns a
    new graph whose surviving vertices keep their ids.
    """

    __slots__ = ("_vertices", "_adj", "_nbrsets", "_m")

    def __init__(self, adjacency: Mapping[int, Iterable[int]]):
        nbrsets: dict[int, frozenset[int]] = {}
        for v, nbrs in adjacency.items():
            nbrsets[v] = frozenset(nbrs)
        degree_sum = 0
        for v, nbrs in nbrsets.items():
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if u not in nbrsets or v not in nbrsets[u]:
                    raise ValueError(f"adjacency is not symmetric for edge {v}-{u}")
            degree_sum += len(nbrs)
        self._vertices: VertexSet = tuple(sorted(nbrsets))
        self._nbrsets = nbrsets
        self._adj = {v: tuple(sorted(nbrsets[v])) for v in self._vertices}
        self._m = degree_sum // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Graph on vertices ``0..n-1`` with the given edges.

        Parallel edges collapse; self-loops and out-of-range endpoints raise.
        """
        adj: dict[int, set[int]] = {v: set() for v in range(n)}
        for u, v in edges:
            if u not in adj or v not in adj:
                raise ValueError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj)

    @classmethod
    def normalized(
        cls, vertices: Iterable[Hashable], edges: Iterable[tuple[Hashable, Hashable]]
    ) -> tuple[Graph, tuple[Hashable, ...]]:
        """Relabel arbitrary vertex labels to ``0..n-1``.

        Returns the graph and the label tuple, where ``labels[i]`` is the
        original label of vertex ``i``. Labels keep their first-seen order.
        """
        labels: list[Hashable] = []
        index: dict[Hashable, int] = {}
        for v in vertices:
            if v not in index:
                index[v] = len(labels)
                labels.append(v)
        pairs = []
        for u, v in edges:
            for w in (u, v):
                if w not in index:
                    index[w] = len(labels)
                    labels.append(w)
            pairs.append((index[u], index[v]))
        return cls.from_edges(len(labels), pairs), tuple(labels)

    @property
    def vertices(self) -> VertexSet:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> VertexSet:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbrsets[v]

    def has_vertex(self, v: int) -> bool:
        return v in self._nbrsets

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._nbrsets and v in self._nbrsets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in ascending order."""
        for u in self._vertices:
            for v in self._adj[u]:
                if u < v:
                    yield u, v

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def induced_subgraph(self, keep: Iterable[int]) -> Graph:
        keep_set = set(keep)
        missing = keep_set - self._nbrsets.keys()
        if missing:
            raise ValueError(f"vertices not in graph: {sorted(missing)}")
        return Graph({v: self._nbrsets[v] & keep_set for v in keep_set})

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._nbrsets

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(tuple(self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Instance:
    """An l-ECOC instance: can at most ``k`` deletions leave only ``l``-vertex components?

    ``k`` is allowed to be negative, which only happens transiently during
    reduction and always means a no-instance.
    """

    graph: Graph
    k: int
    l: int

    def __post_init__(self) -> None:
        if self.l < 1:
            raise ValueError(f"l must be at least 1, got {self.l}")

    @property
    def n(self) -> int:
        return self.graph.n


def _check_subset(g: Graph, x: Iterable[int]) -> set[int]:
    xs = set(x)
    missing = [v for v in xs if v not in g]
    if missing:
        raise ValueError(f"vertices not in graph: {sorted(missing)}")
    return xs


def connected_components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by their smallest vertex."""
    seen: set[int] = set()
    components = []
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        stack = [root]
        comp = [root]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
                    comp.append(u)
        components.append(tuple(sorted(comp)))
    return components


def is_connected_set(g: Graph, x: Iterable[int]) -> bool:
    """True iff ``g[x]`` is connected (the empty set counts as not connected)."""
    xs = set(x)
    if not xs:
        return False
    start = next(iter(xs))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.neighbor_set(v):
            if u in xs and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(xs)


def remove_vertices(g: Graph, x: Iterable[int]) -> Graph:
    """``g - x``; surviving vertices keep their ids."""
    xs = _check_subset(g, x)
    if not xs:
        return g
    return g.induced_subgraph(v for v in g.vertices if v not in xs)


def neighborhood(g: Graph, x: Iterable[int]) -> VertexSet:
    """Open neighbourhood: vertices outside ``x`` adjacent to some vertex of ``x``."""
    xs = _check_subset(g, x)
    out: set[int] = set()
    for v in xs:
        out.update(g.neighbor_set(v))
    return vertex_set(out - xs)


def iter_connected_sets(g: Graph, size: int) -> Iterator[VertexSet]:
    """Yield every connected vertex set of exactly ``size`` vertices once.

    Each set is grown from its smallest vertex; the extension frontier only
    admits larger vertices that are exclusive neighbours of the newest
    vertex, which makes every set reachable along exactly one branch.
    """
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    if size > g.n:
        return
    if size == 1:
        for v in g.vertices:
            yield (v,)
        return

    def extend(
        current: list[int], closed: set[int], frontier: list[int], anchor: int
    ) -> Iterator[VertexSet]:
        # closed is N[current]; its vertices never enter the frontier again.
        frontier = list(frontier)
        while frontier:
            w = frontier.pop(0)
            current.append(w)
            if len(current) == size:
                yield tuple(sorted(current))
            else:
                fresh = [
                    u for u in g.neighbors(w) if u > anchor and u not in closed
                ]
                new_closed = closed | set(g.neighbor_set(w))
                new_closed.add(w)
                yield from extend(current, new_closed, sorted(frontier + fresh), anchor)
            current.pop()

    for v in g.vertices:
        nbrs = g.neighbor_set(v)
        closed = set(nbrs)
        closed.add(v)
        frontier = [u for u in g.neighbors(v) if u > v]
        yield from extend([v], closed, frontier, v)


def enumerate_connected_sets(g: Graph, size: int) -> list[VertexSet]:
    """All connected ``size``-vertex sets in lexicographic order."""
    return sorted(iter_connected_sets(g, size))
